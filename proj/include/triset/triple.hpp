#ifndef TRISET_TRIPLE_HPP
#define TRISET_TRIPLE_HPP

#include <cstdint>

#include "triset/sets.hpp"

namespace triset {

// Per-element coverage counts of a three-set family: exactly_m[m] is the
// number of ground elements lying in exactly m of the three sets.
struct TripleProfile {
    int exactly0 = 0;
    int exactly1 = 0;
    int exactly2 = 0;
    int exactly3 = 0;
    int size_sum = 0; // |A| + |B| + |C|
};

int intersection_size(const Subset& a, const Subset& b);

// Triple score: |A∩B| + |B∩C| + |C∩A|. The three sets must be pairwise
// distinct members of one ground set.
int triple_score(const Subset& a, const Subset& b, const Subset& c);

TripleProfile triple_profile(const Subset& a, const Subset& b, const Subset& c);

// Dual score 2*f1 + 3*f2 + 3*f3; complements the triple score to twice the
// size sum.
int dual_triple_score(const Subset& a, const Subset& b, const Subset& c);

// True iff every unordered triple of distinct members scores >= ell.
// Families with fewer than three members qualify vacuously.
bool is_triple_intersecting(const Family& f, int ell);

// True iff every unordered triple of distinct members has dual score <= x.
bool is_dual_bounded(const Family& f, int x);

// Guaranteed floor on the triple score of any three subsets of [n] whose
// sizes sum to s: max(0, s-n) for s <= 2n, n + 2(s-2n) above.
int score_lower_bound(int size_sum, int n);

namespace detail {
// Mask-level score kernels used by the search and membership loops.
inline int triple_score_masks(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return std::popcount(a & b) + std::popcount(b & c) + std::popcount(c & a);
}
inline int dual_score_masks(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    int s = std::popcount(a) + std::popcount(b) + std::popcount(c);
    return 2 * s - triple_score_masks(a, b, c);
}
} // namespace detail

} // namespace triset

#endif
