#ifndef TRISET_BOUNDS_HPP
#define TRISET_BOUNDS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace triset {

// Exact binomial coefficient; zero whenever a < 0, b < 0 or a < b.
mpz_class binom(long a, long b);

// Closed-form ceiling for the maximum (3,2,2)-intersecting k-uniform family
// on [n]: C(n+1, k-1) + C(n, k-2). Valid for k >= 2, n >= 3k-2.
mpz_class upper_bound_ell2(int n, int k);

// Same for minimum triple score 3: C(n,k-1) + 2 C(n,k-3) + 3 C(n-1,k-3),
// valid for k >= 2, n >= 3k-3.
mpz_class upper_bound_ell3(int n, int k);

// Shortest prefix [f] such that any three j-subsets of [f] have triple
// score >= ell. Piecewise 2j - ceil(ell/3) below j = 2*ell/3, else 3j - ell.
// Requires 3j >= ell >= 0.
int prefix_span(int j, int ell);

struct LowerBound {
    mpz_class value;
    int best_j = 0; // minimum j attaining the maximum
};

// Construction-based floor: max over j in [ceil(ell/3), k] of
// sum_{i=j..k} C(f, i) C(n-f, k-i) with f = prefix_span(j, ell).
// Requires 3k >= ell.
LowerBound lower_bound_uniform(int n, int k, int ell);

struct ClosedForm {
    mpz_class value;
    std::string source; // trivial | remark | base | thm4
};

// Exact maximum when a proven closed-form regime applies, otherwise absent.
std::optional<ClosedForm> closed_form_uniform(int n, int k, int ell);

// One-step recursion ceiling: value(n-1, k) + value(n-1, k-1), where the
// callback supplies exact or upper values for the two right-hand points.
// Valid for ell in {2,3}, k >= 3, n > 3k - ell.
mpz_class recursion_upper_bound(int n, int k, int ell,
                                const std::function<mpz_class(int, int, int)>& table);

// Exact maximum family size under minimum triple score 3n - x, when proven:
// always for x <= 5, and for x = 6p + q with p >= 1 once
// n >= 2^(3p+2) p^2 + p + 1. Absent below that threshold.
std::optional<ClosedForm> closed_form_nonuniform(int n, long x);

// Size the level construction for score budget x = 6p + q reaches
// (the sum the closed form evaluates to); defined for any n >= p + 2.
mpz_class level_family_size(int n, long x);

// Ratio k/n above which the two-prefix construction overtakes the star:
// the root (5 - sqrt(13))/6 of 3y^3 - 8y^2 + 6y - 1 inside (0, 1/3).
double star_threshold_ratio();

struct BoundReport {
    int n = 0;
    std::optional<int> k;
    std::optional<int> ell;
    std::optional<long> x;

    std::optional<LowerBound> lower;
    std::optional<mpz_class> upper;
    std::string upper_source; // thm1 | thm2 | recursion
    std::optional<ClosedForm> exact;
    std::vector<std::pair<std::string, bool>> preconditions;
};

BoundReport bound_report_uniform(int n, int k, int ell);
BoundReport bound_report_nonuniform(int n, long x);

// Stable JSON with big integers as decimal strings.
std::string to_json(const BoundReport& report);

} // namespace triset

#endif
