#include "triset/family_io.hpp"

#include <sstream>

#include <json.hpp>

namespace triset {

std::string to_family_text(const Family& f) {
    std::ostringstream out;
    out << "n " << f.ground_size() << "\n";
    for (const Subset& s : f.members()) {
        if (s.empty()) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int e : s.elements()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

Family read_family_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty family text");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream header(line);
    std::string tag;
    int n = 0;
    if (!(header >> tag >> n) || tag != "n")
        throw std::invalid_argument("family text must start with 'n <size>'");
    GroundSet ground(n);

    std::vector<Subset> members;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream row(line);
        std::string token;
        std::vector<int> elems;
        bool empty_marker = false;
        while (row >> token) {
            if (token == "-") {
                empty_marker = true;
                continue;
            }
            std::size_t used = 0;
            int value;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad element '" + token + "'");
            }
            if (used != token.size()) throw std::invalid_argument("bad element '" + token + "'");
            elems.push_back(value);
        }
        if (empty_marker && !elems.empty())
            throw std::invalid_argument("'-' marks an empty member and must stand alone");
        if (!empty_marker && elems.empty()) continue; // blank line
        for (std::size_t i = 0; i + 1 < elems.size(); ++i)
            if (elems[i] >= elems[i + 1])
                throw std::invalid_argument("member elements must be strictly ascending");
        Subset s = Subset::from_elements(ground, elems);
        for (const Subset& seen : members)
            if (seen == s) throw std::invalid_argument("duplicate family member");
        members.push_back(s);
    }
    return Family(ground, members);
}

Family parse_family_text(const std::string& text) {
    std::istringstream in(text);
    return read_family_text(in);
}

std::string to_family_json(const Family& f) {
    nlohmann::json j;
    j["n"] = f.ground_size();
    nlohmann::json members = nlohmann::json::array();
    for (const Subset& s : f.members()) members.push_back(s.elements());
    j["members"] = members;
    return j.dump();
}

} // namespace triset
