#ifndef TRISET_SEARCH_HPP
#define TRISET_SEARCH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "triset/bounds.hpp"
#include "triset/sets.hpp"

namespace triset {

inline constexpr int kBruteCandidateCap = 40;

// Raised when an instance is too large for the requested method.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constraint every unordered triple of distinct members must satisfy.
struct TripleConstraint {
    enum class Kind { min_score, max_dual };
    Kind kind = Kind::min_score;
    int bound = 0;

    static TripleConstraint min_score(int ell) { return {Kind::min_score, ell}; }
    static TripleConstraint max_dual(int x) { return {Kind::max_dual, x}; }

    bool holds(const Family& f) const;
};

enum class SearchMethod { brute, shifted_bb };

std::string method_name(SearchMethod m);

struct SearchResult {
    long long value = 0;
    Family witness = Family(GroundSet(1));
    SearchMethod method = SearchMethod::brute;
    std::uint64_t nodes_explored = 0;
    long long millis = 0;
};

// Exhaustive maximum over all subfamilies of `candidates` whose triples all
// satisfy the constraint. Depth-first include/exclude with incremental
// triple checks; the witness is the lexicographically least maximum family
// under the canonical member order. Throws when the candidate list exceeds
// the cap.
SearchResult max_family_brute(const Family& candidates, TripleConstraint constraint,
                              int jobs = 1, int cap = kBruteCandidateCap);

// Exact maximum k-uniform family on [n] with every triple scoring >= ell.
// brute enumerates all subfamilies of the C(n,k) candidates; shifted_bb
// walks only dominance downsets (shifted families), pruned by the
// closed-form ceilings through the one-step recursion and the incumbent.
SearchResult exact_max_uniform(int n, int k, int ell, SearchMethod method,
                               int jobs = 1);

// Exact maximum over arbitrary families on [n]: brute over all 2^n subsets
// (n <= 5), or the canonicalized walk over upward-closed shifted families
// (n <= 6).
SearchResult exact_max_nonuniform(int n, int ell, SearchMethod method,
                                  int jobs = 1);

SearchMethod default_nonuniform_method(int n);

struct SweepRow {
    int k = 0;
    mpz_class lower;
    int best_j = 0;
};

// lower_bound_uniform evaluated across a k range; locates the j-transition
// ratios empirically.
std::vector<SweepRow> best_j_sweep(int ell, int n, int k_from, int k_to);

// {"value":..., "method":..., "witness":[[...],...], "nodes":..., "millis":...}
std::string to_json(const SearchResult& result);

} // namespace triset

#endif
