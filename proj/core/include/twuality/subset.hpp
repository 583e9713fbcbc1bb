#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace twuality {

/// Hard limit on ground-set sizes: one subset = one machine word.
inline constexpr std::size_t max_ground_size = 64;

/// Default cap on 2^n subset enumerations (polynomials, matrix realization).
inline constexpr std::size_t default_enumeration_cap = 16;

/// A subset of a ground set of at most 64 elements; bit i <=> element i.
class SubsetMask {
public:
    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

    static constexpr SubsetMask empty_set() { return SubsetMask(0); }

    static constexpr SubsetMask single(std::size_t index) {
        return SubsetMask(std::uint64_t{1} << index);
    }

    /// The full ground set {0, ..., n-1}.
    static constexpr SubsetMask full(std::size_t n) {
        return n == 0 ? SubsetMask(0) : SubsetMask(~std::uint64_t{0} >> (64 - n));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool test(std::size_t index) const { return (bits_ >> index) & 1; }

    /// True when every element of `other` is also in *this.
    constexpr bool contains(SubsetMask other) const {
        return (other.bits_ & ~bits_) == 0;
    }

    /// True when the mask only uses the low n bits.
    constexpr bool within(std::size_t n) const {
        return full(n).contains(*this);
    }

    constexpr SubsetMask with(std::size_t index) const {
        return SubsetMask(bits_ | (std::uint64_t{1} << index));
    }

    constexpr SubsetMask without(std::size_t index) const {
        return SubsetMask(bits_ & ~(std::uint64_t{1} << index));
    }

    /// Set difference: the elements of *this not in `other`.
    constexpr SubsetMask minus(SubsetMask other) const {
        return SubsetMask(bits_ & ~other.bits_);
    }

    friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) {
        return SubsetMask(a.bits_ ^ b.bits_);
    }
    friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
        return SubsetMask(a.bits_ & b.bits_);
    }
    friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
        return SubsetMask(a.bits_ | b.bits_);
    }

    friend constexpr bool operator==(SubsetMask, SubsetMask) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Canonical subset order: smaller sets first, ties broken numerically.
constexpr bool canonical_less(SubsetMask a, SubsetMask b) {
    const int pa = a.size();
    const int pb = b.size();
    if (pa != pb) return pa < pb;
    return a.bits() < b.bits();
}

/// Calls fn(i) for every element index i in the mask, ascending.
template <class Fn>
constexpr void for_each_element(SubsetMask mask, Fn&& fn) {
    std::uint64_t rest = mask.bits();
    while (rest != 0) {
        const int i = std::countr_zero(rest);
        fn(static_cast<std::size_t>(i));
        rest &= rest - 1;
    }
}

}  // namespace twuality
