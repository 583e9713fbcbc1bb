#pragma once

// Internal fast representation for ground sets of at most 6 elements: the
// whole family fits in one 64-bit word, bit s set <=> subset s feasible.
// Single-element twists and loop complementations become O(1) bit shuffles,
// which makes the 6^n vf-safe sweep affordable.

#include <bit>
#include <cstdint>

#include "twuality/set_system.hpp"
#include "twuality/subset.hpp"

namespace twuality::detail {

inline constexpr unsigned small_family_max_n = 6;

// Bit positions s with element e absent (s >> e even), for e = 0..5.
inline constexpr std::uint64_t kWithoutElement[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

struct SmallFamily {
    std::uint64_t bits = 0;  // family membership, indexed by subset value
    unsigned n = 0;

    friend bool operator==(const SmallFamily&, const SmallFamily&) = default;
};

inline SmallFamily to_small(const SetSystem& system) {
    SmallFamily f{0, static_cast<unsigned>(system.ground_size())};
    for (const SubsetMask s : system.family()) f.bits |= std::uint64_t{1} << s.bits();
    return f;
}

inline SetSystem to_set_system(const SmallFamily& f,
                               const std::vector<std::string>& names) {
    std::vector<SubsetMask> family;
    family.reserve(static_cast<std::size_t>(std::popcount(f.bits)));
    std::uint64_t rest = f.bits;
    while (rest != 0) {
        family.push_back(SubsetMask(static_cast<std::uint64_t>(std::countr_zero(rest))));
        rest &= rest - 1;
    }
    return SetSystem(names, std::move(family));
}

// Twist at element e: subset s feasible afterwards iff s ^ {e} was before,
// i.e. swap the halves with and without e.
inline SmallFamily twist_at(SmallFamily f, unsigned e) {
    const std::uint64_t lo = f.bits & kWithoutElement[e];
    const std::uint64_t hi = f.bits & ~kWithoutElement[e];
    const unsigned shift = 1u << e;
    return {(lo << shift) | (hi >> shift), f.n};
}

// Loop complementation at e: toggle s + e for every feasible s avoiding e.
inline SmallFamily loop_complement_at(SmallFamily f, unsigned e) {
    const std::uint64_t toggles = (f.bits & kWithoutElement[e]) << (1u << e);
    return {f.bits ^ toggles, f.n};
}

// Applies a canonical word (index 0..5 in the "", "*", "x", "*x", "x*",
// "*x*" order) at element e, letters left to right.
inline SmallFamily apply_canonical_at(SmallFamily f, std::size_t word_index, unsigned e) {
    switch (word_index) {
        case 0: return f;
        case 1: return twist_at(f, e);
        case 2: return loop_complement_at(f, e);
        case 3: return loop_complement_at(twist_at(f, e), e);
        case 4: return twist_at(loop_complement_at(f, e), e);
        default: return twist_at(loop_complement_at(twist_at(f, e), e), e);
    }
}

inline bool small_is_delta_matroid(const SmallFamily& f) {
    if (f.bits == 0) return false;
    for (std::uint64_t xs = f.bits; xs != 0; xs &= xs - 1) {
        const unsigned x = static_cast<unsigned>(std::countr_zero(xs));
        // exchange[u] = elements v with X ^ {u, v} feasible
        unsigned exchange[6] = {};
        for (unsigned u = 0; u < f.n; ++u) {
            unsigned row = 0;
            for (unsigned v = 0; v < f.n; ++v) {
                row |= static_cast<unsigned>((f.bits >> (x ^ ((1u << u) | (1u << v)))) & 1) << v;
            }
            exchange[u] = row;
        }
        for (std::uint64_t ys = f.bits; ys != 0; ys &= ys - 1) {
            const unsigned y = static_cast<unsigned>(std::countr_zero(ys));
            const unsigned diff = x ^ y;
            for (unsigned us = diff; us != 0; us &= us - 1) {
                const unsigned u = static_cast<unsigned>(std::countr_zero(us));
                if ((exchange[u] & diff) == 0) return false;
            }
        }
    }
    return true;
}

// All 6^n canonical-word assignments, explored depth-first by element with
// pruning: a node's system is itself the image of an assignment (identity on
// the untouched tail), so a non-delta-matroid anywhere settles the answer.
inline bool small_is_vf_safe_from(SmallFamily f, unsigned e) {
    if (!small_is_delta_matroid(f)) return false;
    for (; e < f.n; ++e) {
        for (std::size_t w = 1; w < 6; ++w) {
            if (!small_is_vf_safe_from(apply_canonical_at(f, w, e), e + 1)) return false;
        }
    }
    return true;
}

inline bool small_is_vf_safe(const SmallFamily& f) { return small_is_vf_safe_from(f, 0); }

}  // namespace twuality::detail
