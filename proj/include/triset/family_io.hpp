#ifndef TRISET_FAMILY_IO_HPP
#define TRISET_FAMILY_IO_HPP

#include <iosfwd>
#include <string>

#include "triset/sets.hpp"

namespace triset {

// Family text format: first line "n <integer>", then one member per line as
// space-separated ascending elements, the empty set written as "-". Output
// is canonical (members sorted by size, then lexicographically); LF endings.
std::string to_family_text(const Family& f);

Family parse_family_text(const std::string& text);
Family read_family_text(std::istream& in);

// JSON form: members as arrays of integers.
std::string to_family_json(const Family& f);

} // namespace triset

#endif
