#include "triset/constructions.hpp"

#include <stdexcept>

#include "triset/bounds.hpp"
#include "triset/shifting.hpp"

namespace triset {



Family uniform_prefix_family(int n, int k, int ell, int j) {
    GroundSet ground(n);
    if (ell < 0 || 3 * k < ell)
        throw std::invalid_argument("prefix family needs 0 <= ell <= 3k");
    if (j < (ell + 2) / 3 || j > k)
        throw std::invalid_argument("prefix family needs ceil(ell/3) <= j <= k");
    int f = prefix_span(j, ell);
    if (f > n) throw std::invalid_argument("prefix span exceeds the ground set");

    std::uint64_t prefix = f == 0 ? 0 : Subset(ground, ((std::uint64_t)1 << f) - 1).bits();
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m : k_subset_masks(ground.full_mask(), k))
        if (std::popcount(m & prefix) >= j) masks.push_back(m);
    return Family(ground, masks);
}

Family star_family(int n, int k) {
    GroundSet ground(n);
    if (k < 1 || k > n) throw std::invalid_argument("star needs 1 <= k <= n");
    std::vector<std::uint64_t> masks;
    for (std::uint64_t rest : k_subset_masks(ground.full_mask() & ~1ull, k - 1))
        masks.push_back(rest | 1ull);
    return Family(ground, masks);
}

Family nonuniform_dual_family(int n, long x) {
    GroundSet ground(n);
    long p = x / 6;
    int q = (int)(x % 6);
    if (x < 0 || p < 1) throw std::invalid_argument("level construction needs x >= 6");
    if (n < p + 2) throw std::invalid_argument("level construction needs n >= p+2");

    std::vector<std::uint64_t> masks;
    for (long i = 0; i <= p; ++i)
        for (std::uint64_t m : k_subset_masks(ground.full_mask(), (int)i)) masks.push_back(m);

    std::uint64_t e1 = 1ull, e2 = 2ull;
    switch (q) {
    case 0:
    case 1:
        break;
    case 2: // (p+1)-sets containing both 1 and 2
        for (std::uint64_t m : k_subset_masks(ground.full_mask() & ~(e1 | e2), (int)p - 1))
            masks.push_back(m | e1 | e2);
        break;
    case 3:
    case 4: // (p+1)-sets containing 1
        for (std::uint64_t m : k_subset_masks(ground.full_mask() & ~e1, (int)p))
            masks.push_back(m | e1);
        break;
    case 5: // (p+1)-sets meeting {1,2}
        for (std::uint64_t m : k_subset_masks(ground.full_mask() & ~e1, (int)p))
            masks.push_back(m | e1);
        for (std::uint64_t m : k_subset_masks(ground.full_mask() & ~(e1 | e2), (int)p))
            masks.push_back(m | e2);
        break;
    }
    return Family(ground, masks);
}

Family nonuniform_primal_family(int n, long x) {
    return complement_family(nonuniform_dual_family(n, x));
}

Family prefix_restriction_counterexample() {
    GroundSet ground(6);
    std::vector<Subset> tops = {Subset(ground, {1, 2, 6}), Subset(ground, {1, 3, 6}),
                                Subset(ground, {1, 4, 5})};
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m : k_subset_masks(ground.full_mask(), 3)) {
        Subset s(ground, m);
        for (const Subset& top : tops)
            if (dominated_by(s, top)) {
                masks.push_back(m);
                break;
            }
    }
    return Family(ground, masks);
}

} // namespace triset
