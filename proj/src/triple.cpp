#include "triset/triple.hpp"

namespace triset {

namespace {

void require_same_ground(const Subset& a, const Subset& b) {
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("subsets live on different ground sets");
}

void require_distinct_triple(const Subset& a, const Subset& b, const Subset& c) {
    require_same_ground(a, b);
    require_same_ground(b, c);
    if (a == b || b == c || a == c)
        throw std::invalid_argument("triple score needs three pairwise distinct sets");
}

} // namespace

int intersection_size(const Subset& a, const Subset& b) {
    require_same_ground(a, b);
    return std::popcount(a.bits() & b.bits());
}

int triple_score(const Subset& a, const Subset& b, const Subset& c) {
    require_distinct_triple(a, b, c);
    return detail::triple_score_masks(a.bits(), b.bits(), c.bits());
}

TripleProfile triple_profile(const Subset& a, const Subset& b, const Subset& c) {
    require_distinct_triple(a, b, c);
    std::uint64_t x = a.bits(), y = b.bits(), z = c.bits();
    TripleProfile p;
    p.exactly3 = std::popcount(x & y & z);
    p.exactly2 = std::popcount((x & y) | (y & z) | (z & x)) - p.exactly3;
    p.exactly1 = std::popcount(x | y | z) - p.exactly2 - p.exactly3;
    p.exactly0 = a.ground_size() - p.exactly1 - p.exactly2 - p.exactly3;
    p.size_sum = a.size() + b.size() + c.size();
    return p;
}

int dual_triple_score(const Subset& a, const Subset& b, const Subset& c) {
    require_distinct_triple(a, b, c);
    return detail::dual_score_masks(a.bits(), b.bits(), c.bits());
}

bool is_triple_intersecting(const Family& f, int ell) {
    if (ell <= 0) return true;
    const auto& m = f.masks();
    std::size_t count = m.size();
    if (count < 3) return true;

    if (count < 150) {
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = i + 1; j < count; ++j)
                for (std::size_t l = j + 1; l < count; ++l)
                    if (detail::triple_score_masks(m[i], m[j], m[l]) < ell) return false;
        return true;
    }

    // large families: pairwise intersection matrix, then a min-reduction per
    // row pair (the inner sums stay under 255, so bytes vectorize)
    std::vector<std::uint8_t> pair(count * count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            pair[i * count + j] = pair[j * count + i] =
                (std::uint8_t)std::popcount(m[i] & m[j]);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint8_t* row_i = pair.data() + i * count;
        for (std::size_t j = i + 1; j < count; ++j) {
            const std::uint8_t* row_j = pair.data() + j * count;
            std::uint8_t lowest = 255;
            for (std::size_t l = j + 1; l < count; ++l) {
                std::uint8_t s = (std::uint8_t)(row_i[l] + row_j[l]);
                lowest = s < lowest ? s : lowest;
            }
            if (j + 1 < count && (int)row_i[j] + lowest < ell) return false;
        }
    }
    return true;
}

bool is_dual_bounded(const Family& f, int x) {
    const auto& m = f.masks();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (std::size_t l = j + 1; l < m.size(); ++l)
                if (detail::dual_score_masks(m[i], m[j], m[l]) > x) return false;
    return true;
}

int score_lower_bound(int size_sum, int n) {
    if (n < 1) throw std::invalid_argument("ground size must be positive");
    if (size_sum < 0 || size_sum > 3 * n)
        throw std::invalid_argument("size sum must lie in [0, 3n]");
    if (size_sum <= 2 * n) return std::max(0, size_sum - n);
    return n + 2 * (size_sum - 2 * n);
}

} // namespace triset
