#pragma once

// Internal dense family representation for subset sweeps: bit s of the word
// array marks subset s feasible (2^n bits, n up to the enumeration cap).
// Single-element twists and loop complementations act as word-parallel bit
// shuffles: within a 64-bit word for elements 0..5, as whole-word block
// swaps/xors above. This is the multi-word generalization of small_family.

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "family_ops.hpp"
#include "small_family.hpp"

namespace twuality::detail {

struct BigFamily {
    std::vector<std::uint64_t> words;  // 2^n bits, low word first
    unsigned n = 0;
};

inline BigFamily to_big(const Family& family, unsigned n) {
    BigFamily big;
    big.n = n;
    big.words.assign(n < 6 ? 1 : (std::size_t{1} << (n - 6)), 0);
    for (const SubsetMask f : family) {
        big.words[f.bits() >> 6] |= std::uint64_t{1} << (f.bits() & 63);
    }
    return big;
}

inline void big_twist_at(BigFamily& f, unsigned e) {
    if (e < 6) {
        const std::uint64_t mask = kWithoutElement[e];
        const unsigned k = 1u << e;
        for (auto& w : f.words) w = ((w & mask) << k) | ((w >> k) & mask);
        return;
    }
    const std::size_t block = std::size_t{1} << (e - 6);
    for (std::size_t i = 0; i < f.words.size(); i += 2 * block) {
        for (std::size_t j = 0; j < block; ++j) {
            std::swap(f.words[i + j], f.words[i + block + j]);
        }
    }
}

inline void big_loop_complement_at(BigFamily& f, unsigned e) {
    if (e < 6) {
        const std::uint64_t mask = kWithoutElement[e];
        const unsigned k = 1u << e;
        for (auto& w : f.words) w ^= (w & mask) << k;
        return;
    }
    const std::size_t block = std::size_t{1} << (e - 6);
    for (std::size_t i = 0; i < f.words.size(); i += 2 * block) {
        for (std::size_t j = 0; j < block; ++j) {
            f.words[i + block + j] ^= f.words[i + j];
        }
    }
}

inline void big_apply_word_at(BigFamily& f, const TwualWord& word, unsigned e) {
    for (const TwualLetter letter : word.letters()) {
        if (letter == TwualLetter::star) {
            big_twist_at(f, e);
        } else {
            big_loop_complement_at(f, e);
        }
    }
}

// Bit positions 0..63 grouped by their own popcount, for per-word extremal
// subset sizes: |s| = popcount(word index) + popcount(s mod 64).
inline constexpr std::array<std::uint64_t, 7> kSizeBuckets = [] {
    std::array<std::uint64_t, 7> buckets{};
    for (unsigned p = 0; p < 64; ++p) {
        buckets[static_cast<std::size_t>(std::popcount(p))] |= std::uint64_t{1} << p;
    }
    return buckets;
}();

// (r_min, r_max) over the feasible sets; requires a nonempty family.
inline std::pair<int, int> big_min_max_size(const BigFamily& f) {
    int r_min = 65, r_max = -1;
    for (std::size_t i = 0; i < f.words.size(); ++i) {
        const std::uint64_t w = f.words[i];
        if (w == 0) continue;
        const int base = std::popcount(i);
        for (int k = 0; k < 7; ++k) {
            if (w & kSizeBuckets[static_cast<std::size_t>(k)]) {
                if (base + k < r_min) r_min = base + k;
                if (base + k > r_max) r_max = base + k;
            }
        }
    }
    return {r_min, r_max};
}

}  // namespace twuality::detail
