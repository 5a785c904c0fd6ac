#ifndef TRISET_SETS_HPP
#define TRISET_SETS_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace triset {

// Single-word bitmask representation; element i of [n] lives in bit i-1.
inline constexpr int kMaxGroundSize = 64;

class GroundSet {
public:
    explicit GroundSet(int n) : n_(n) {
        if (n < 1 || n > kMaxGroundSize)
            throw std::invalid_argument("ground set size must be in [1, 64], got " +
                                        std::to_string(n));
    }

    int size() const { return n_; }
    std::uint64_t full_mask() const {
        return n_ == 64 ? ~0ull : ((1ull << n_) - 1);
    }
    bool operator==(const GroundSet&) const = default;

private:
    int n_;
};

class Subset {
public:
    Subset(GroundSet ground, std::uint64_t bits) : bits_(bits), n_(ground.size()) {
        if (bits & ~ground.full_mask())
            throw std::invalid_argument("subset has elements outside the ground set");
    }

    Subset(GroundSet ground, std::initializer_list<int> elems) : bits_(0), n_(ground.size()) {
        for (int e : elems) {
            if (e < 1 || e > n_)
                throw std::invalid_argument("element " + std::to_string(e) +
                                            " outside [1, " + std::to_string(n_) + "]");
            bits_ |= 1ull << (e - 1);
        }
    }

    static Subset from_elements(GroundSet ground, const std::vector<int>& elems);

    GroundSet ground() const { return GroundSet(n_); }
    int ground_size() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int e) const { return e >= 1 && e <= n_ && (bits_ >> (e - 1)) & 1; }

    std::vector<int> elements() const;
    Subset complement() const { return Subset(ground(), ~bits_ & ground().full_mask()); }

    bool operator==(const Subset&) const = default;

private:
    std::uint64_t bits_;
    int n_;
};

// Canonical member order: by size, then lexicographic on ascending element
// lists (the set owning the smallest element where they differ comes first).
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return a & (diff & -diff);
}

inline bool mask_canonical_less(std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_lex_less(a, b);
}

inline bool subset_canonical_less(const Subset& a, const Subset& b) {
    return mask_canonical_less(a.bits(), b.bits());
}

// A finite collection of distinct subsets of one ground set, kept in
// canonical order. Immutable after construction.
class Family {
public:
    explicit Family(GroundSet ground) : n_(ground.size()) {}
    Family(GroundSet ground, std::vector<std::uint64_t> masks);
    Family(GroundSet ground, const std::vector<Subset>& members);

    GroundSet ground() const { return GroundSet(n_); }
    int ground_size() const { return n_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }

    const std::vector<std::uint64_t>& masks() const { return masks_; }
    Subset member(std::size_t i) const { return Subset(ground(), masks_[i]); }
    std::vector<Subset> members() const;

    bool contains(std::uint64_t mask) const;
    bool contains(const Subset& s) const { return contains(s.bits()); }

    // k when every member has exactly k elements (empty family: no value).
    std::optional<int> uniform_size() const;

    bool operator==(const Family&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> masks_;
};

Family complement_family(const Family& f);

// All k-subsets of the elements set in pool, in ascending mask-lex order of
// the compacted positions (Gosper's hack scattered back onto the pool).
std::vector<std::uint64_t> k_subset_masks(std::uint64_t pool, int k);

} // namespace triset

#endif
