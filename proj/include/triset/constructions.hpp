#ifndef TRISET_CONSTRUCTIONS_HPP
#define TRISET_CONSTRUCTIONS_HPP

#include "triset/sets.hpp"

namespace triset {

// All k-subsets of [n] meeting the prefix [prefix_span(j, ell)] in at least
// j elements. Lands in the minimum-score-ell class; its size equals the
// lower-bound summand for this j. Requires ceil(ell/3) <= j <= k and
// prefix_span(j, ell) <= n.
Family uniform_prefix_family(int n, int k, int ell, int j);

// All k-subsets containing element 1.
Family star_family(int n, int k);

// Extremal family for dual score budget x = 6p + q (p >= 1, n >= p + 2):
// every set of size <= p, plus the (p+1)-sets selected by q
//   q 0,1: none        q 2: those containing both 1 and 2
//   q 3,4: those containing 1
//   q 5:   those meeting {1, 2}.
Family nonuniform_dual_family(int n, long x);

// Complement of the dual family; every triple scores >= 3n - x.
Family nonuniform_primal_family(int n, long x);

// The dominance downset of {1,2,6}, {1,3,6}, {1,4,5} over [6]: shifted, all
// triples score >= 4, yet restriction to [5] drops a triple below 4. Shows
// the prefix-restriction law stops at ell = 3.
Family prefix_restriction_counterexample();

} // namespace triset

#endif
