#include "triset/shifting.hpp"

#include <algorithm>

#include "triset/triple.hpp"

namespace triset {

namespace {

bool sorted_contains(const std::vector<std::uint64_t>& masks, std::uint64_t m) {
    auto it = std::lower_bound(masks.begin(), masks.end(), m, mask_canonical_less);
    return it != masks.end() && *it == m;
}

} // namespace

Family shift_family(const Family& f, ShiftPair p) {
    int n = f.ground_size();
    if (p.from > n) throw std::invalid_argument("shift pair outside the ground set");
    std::uint64_t from_bit = 1ull << (p.from - 1);
    std::uint64_t to_bit = 1ull << (p.to - 1);

    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks()) {
        if ((m & from_bit) && !(m & to_bit)) {
            std::uint64_t moved = (m ^ from_bit) | to_bit;
            if (!f.contains(moved)) {
                out.push_back(moved);
                continue;
            }
        }
        out.push_back(m);
    }
    return Family(f.ground(), out);
}

long long weight(const Subset& s) {
    long long w = 0;
    for (std::uint64_t rest = s.bits(); rest; rest &= rest - 1)
        w += std::countr_zero(rest) + 1;
    return w;
}

long long weight(const Family& f) {
    long long w = 0;
    for (std::uint64_t m : f.masks()) w += weight(Subset(f.ground(), m));
    return w;
}

bool dominated_by(const Subset& lo, const Subset& hi) {
    if (lo.ground_size() != hi.ground_size())
        throw std::invalid_argument("dominance needs one ground set");
    if (lo.size() != hi.size())
        throw std::invalid_argument("dominance is defined between equal-sized sets");
    auto a = lo.elements(), b = hi.elements();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Within a size level, downward closure under dominance is equivalent to
// closure under single-element decrements.
bool is_shifted(const Family& f) {
    for (std::uint64_t m : f.masks()) {
        for (std::uint64_t rest = m; rest; rest &= rest - 1) {
            int z = std::countr_zero(rest) + 1;
            if (z == 1) continue;
            std::uint64_t lower_bit = 1ull << (z - 2);
            if (m & lower_bit) continue;
            std::uint64_t target = (m ^ (1ull << (z - 1))) | lower_bit;
            if (!f.contains(target)) return false;
        }
    }
    return true;
}

Family canonical_shift(const Family& f) {
    Family cur = f;
    int n = cur.ground_size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 1; y < n && !changed; ++y) {
            for (int x = y + 1; x <= n && !changed; ++x) {
                Family next = shift_family(cur, ShiftPair(x, y));
                if (next != cur) {
                    cur = std::move(next);
                    changed = true; // weight dropped; rescan from the first pair
                }
            }
        }
    }
    return cur;
}

namespace {

// Largest superset of `base` absent from `masks`: maximal size first, then
// lexicographically smallest element list. Zero when every superset is used.
std::uint64_t largest_unused_superset(std::uint64_t base, int n,
                                      const std::vector<std::uint64_t>& masks) {
    std::uint64_t full = GroundSet(n).full_mask();
    std::vector<int> free_elems = Subset(GroundSet(n), full & ~base).elements();
    int base_size = std::popcount(base);

    for (int t = n; t > base_size; --t) {
        int add = t - base_size;
        if (add > (int)free_elems.size()) continue;
        // additions in lex order give unions in lex order
        std::vector<int> idx(add);
        for (int i = 0; i < add; ++i) idx[i] = i;
        while (true) {
            std::uint64_t u = base;
            for (int i : idx) u |= 1ull << (free_elems[(std::size_t)i] - 1);
            if (!sorted_contains(masks, u)) return u;
            int i = add - 1;
            while (i >= 0 && idx[(std::size_t)i] == (int)free_elems.size() - add + i) --i;
            if (i < 0) break;
            ++idx[(std::size_t)i];
            for (int j = i + 1; j < add; ++j) idx[(std::size_t)j] = idx[(std::size_t)j - 1] + 1;
        }
    }
    return 0;
}

} // namespace

Family upward_closure(const Family& f) {
    int n = f.ground_size();
    std::vector<std::uint64_t> masks = f.masks();
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            std::uint64_t target = largest_unused_superset(masks[i], n, masks);
            if (target != 0) {
                masks[i] = target;
                std::sort(masks.begin(), masks.end(), mask_canonical_less);
                moved = true;
                break; // total member-size sum grew; restart the scan
            }
        }
    }
    return Family(f.ground(), masks);
}

bool is_upward_closed(const Family& f) {
    std::uint64_t full = f.ground().full_mask();
    for (std::uint64_t m : f.masks())
        for (std::uint64_t rest = full & ~m; rest; rest &= rest - 1)
            if (!f.contains(m | (rest & -rest))) return false;
    return true;
}

Family canonical_upclosed_shift(const Family& f) {
    Family cur = f;
    while (true) {
        if (!is_upward_closed(cur)) {
            cur = upward_closure(cur);
            continue;
        }
        if (!is_shifted(cur)) {
            cur = canonical_shift(cur);
            continue;
        }
        return cur;
    }
}

bool prefix_restriction_check(const Family& f, int cutoff, int ell) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
    std::uint64_t cut = cutoff >= 64 ? ~0ull : ((1ull << cutoff) - 1);
    const auto& m = f.masks();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (std::size_t l = j + 1; l < m.size(); ++l)
                if (detail::triple_score_masks(m[i] & cut, m[j] & cut, m[l] & cut) < ell)
                    return false;
    return true;
}

int min_restricted_score(const Family& f, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
    std::uint64_t cut = cutoff >= 64 ? ~0ull : ((1ull << cutoff) - 1);
    int best = 3 * cutoff;
    const auto& m = f.masks();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (std::size_t l = j + 1; l < m.size(); ++l)
                best = std::min(best,
                                detail::triple_score_masks(m[i] & cut, m[j] & cut, m[l] & cut));
    return best;
}

bool prefix_restriction_holds(const Family& f, int ell) {
    if (ell != 2 && ell != 3)
        throw std::invalid_argument("the prefix restriction law is proven for ell 2 and 3 only");
    auto k = f.uniform_size();
    if (f.size() > 0 && !k.has_value())
        throw std::invalid_argument("prefix restriction needs a uniform family");
    if (f.size() < 3) return true;
    return prefix_restriction_check(f, 3 * *k - ell, ell);
}

} // namespace triset
