#ifndef TRISET_SHIFTING_HPP
#define TRISET_SHIFTING_HPP

#include <cstdint>

#include "triset/sets.hpp"

namespace triset {

// A compression move: replace element `from` by the smaller element `to`.
struct ShiftPair {
    int from; // x
    int to;   // y, with 1 <= to < from

    ShiftPair(int from_, int to_) : from(from_), to(to_) {
        if (to < 1 || to >= from)
            throw std::invalid_argument("shift pair needs 1 <= to < from");
    }
};

// One compression step: members containing `from` but not `to` move to
// (member - from + to) unless that target is already present.
Family shift_family(const Family& f, ShiftPair p);

// Element sum of a set, and the total over a family.
long long weight(const Subset& s);
long long weight(const Family& f);

// Componentwise comparison of the ascending element lists; both sets must
// have the same size.
bool dominated_by(const Subset& lo, const Subset& hi);

// Closed downward under dominance within each size level.
bool is_shifted(const Family& f);

// Applies shifts, pairs scanned in (to, from) order with a restart after
// every change, until no pair moves anything. Output is shifted and has the
// input's cardinality.
Family canonical_shift(const Family& f);

// Repeated upward moves (member replaced by its largest unused superset,
// ties broken lexicographically) until every superset of every member is
// present. Cardinality is preserved.
Family upward_closure(const Family& f);

// Alternates upward closure and canonical shifting until the family is both
// upward-closed and shifted.
Family canonical_upclosed_shift(const Family& f);

bool is_upward_closed(const Family& f);

// Whether every distinct triple of f still scores >= ell after each member
// is cut down to its intersection with [cutoff]. Restricted sets may
// coincide; the triple is evaluated regardless.
bool prefix_restriction_check(const Family& f, int cutoff, int ell);

// Smallest restricted triple score over all distinct member triples
// (3 * cutoff when no triple exists).
int min_restricted_score(const Family& f, int cutoff);

// The prefix-restriction law for k-uniform families: every triple keeps
// score >= ell after restriction to [3k - ell]. Only proven for ell 2 and 3;
// other ell are rejected.
bool prefix_restriction_holds(const Family& f, int ell);

} // namespace triset

#endif
