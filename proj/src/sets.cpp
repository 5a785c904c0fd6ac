#include "triset/sets.hpp"

#include <algorithm>

namespace triset {

Subset Subset::from_elements(GroundSet ground, const std::vector<int>& elems) {
    std::uint64_t bits = 0;
    for (int e : elems) {
        if (e < 1 || e > ground.size())
            throw std::invalid_argument("element " + std::to_string(e) + " outside [1, " +
                                        std::to_string(ground.size()) + "]");
        bits |= 1ull << (e - 1);
    }
    return Subset(ground, bits);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve((std::size_t)size());
    for (std::uint64_t rest = bits_; rest; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

Family::Family(GroundSet ground, std::vector<std::uint64_t> masks)
    : n_(ground.size()), masks_(std::move(masks)) {
    std::uint64_t full = ground.full_mask();
    for (std::uint64_t m : masks_)
        if (m & ~full) throw std::invalid_argument("family member outside the ground set");
    std::sort(masks_.begin(), masks_.end(), mask_canonical_less);
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

Family::Family(GroundSet ground, const std::vector<Subset>& members) : n_(ground.size()) {
    masks_.reserve(members.size());
    for (const Subset& s : members) {
        if (s.ground_size() != n_)
            throw std::invalid_argument("family member from a different ground set");
        masks_.push_back(s.bits());
    }
    std::sort(masks_.begin(), masks_.end(), mask_canonical_less);
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

std::vector<Subset> Family::members() const {
    std::vector<Subset> out;
    out.reserve(masks_.size());
    for (std::uint64_t m : masks_) out.emplace_back(ground(), m);
    return out;
}

bool Family::contains(std::uint64_t mask) const {
    auto it = std::lower_bound(masks_.begin(), masks_.end(), mask, mask_canonical_less);
    return it != masks_.end() && *it == mask;
}

std::optional<int> Family::uniform_size() const {
    if (masks_.empty()) return std::nullopt;
    int k = std::popcount(masks_.front());
    for (std::uint64_t m : masks_)
        if (std::popcount(m) != k) return std::nullopt;
    return k;
}

Family complement_family(const Family& f) {
    std::uint64_t full = f.ground().full_mask();
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks()) out.push_back(~m & full);
    return Family(f.ground(), out);
}

std::vector<std::uint64_t> k_subset_masks(std::uint64_t pool, int k) {
    std::vector<int> elems;
    for (std::uint64_t rest = pool; rest; rest &= rest - 1)
        elems.push_back(std::countr_zero(rest));
    int m = (int)elems.size();
    std::vector<std::uint64_t> out;
    if (k < 0 || k > m) return out;
    if (k == 0) return {0ull};
    std::uint64_t comb = (k == 64) ? ~0ull : ((1ull << k) - 1);
    std::uint64_t end = comb << (m - k);
    while (true) {
        std::uint64_t scattered = 0;
        for (std::uint64_t rest = comb; rest; rest &= rest - 1)
            scattered |= 1ull << elems[(std::size_t)std::countr_zero(rest)];
        out.push_back(scattered);
        if (comb == end) break;
        std::uint64_t lo = comb & -comb;
        std::uint64_t carry = comb + lo;
        comb = carry | (((comb ^ carry) >> 2) / lo);
    }
    return out;
}

} // namespace triset
