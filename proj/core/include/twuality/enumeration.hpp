#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twuality/bouquet.hpp"
#include "twuality/gf2.hpp"
#include "twuality/set_system.hpp"

namespace twuality {

/// Limits for exhaustive sweeps and seeded sampling at the boundary sizes.
struct EnumerationBudget {
    int max_ground_size = 4;   ///< set-system sweeps; sizes above 4 are sampled
    int max_chords = 3;        ///< chord-diagram sweeps; size 4 is sampled
    int sample_count = 1000;   ///< samples per size in sampled mode
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/// Deterministic 64-bit linear congruential generator,
/// state' = state * 6364136223846793005 + 1442695040888963407 (Knuth MMIX).
/// Draws use the high 32 bits of the advanced state, so any implementation
/// of the same recurrence reproduces identical streams.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform draw in [0, bound) from the high 32 bits.
    std::uint64_t next_below(std::uint64_t bound) {
        return ((next() >> 32) * bound) >> 32;
    }

    bool next_bit() { return next() >> 63; }

private:
    std::uint64_t state_;
};

/// Every nonempty family over elements "1".."n", each exactly once, in
/// canonical order: families compared lexicographically as sorted mask lists
/// (masks ordered by size then value). Throws for n > 4.
std::vector<SetSystem> enumerate_proper_set_systems(int n);

/// The systems above that satisfy the symmetric exchange axiom.
std::vector<SetSystem> enumerate_delta_matroids(int n);

/// Parity oracle for loop complementation: Y is feasible in D^{x|X} iff the
/// number of feasible Z with Y - X <= Z <= Y is odd. Independent of the
/// toggle-based implementation; used to cross-check it.
bool loop_complement_oracle(const SetSystem& system, SubsetMask x, SubsetMask y);

/// All signed chord diagrams with m chords at a fixed starting rotation:
/// every double-occurrence word with labels "a", "b", ... in first-occurrence
/// order, with every twist pattern. Throws for m > 3 (use sampling there).
std::vector<SignedChordDiagram> enumerate_signed_chord_diagrams(int m);

/// Seeded sample of signed chord diagrams with m chords (word by seeded
/// shuffle, twist pattern by seeded bits).
std::vector<SignedChordDiagram> sample_signed_chord_diagrams(int m, int count,
                                                             std::uint64_t seed);

/// Uniform symmetric matrix: n(n+1)/2 seeded bits fill the upper triangle.
Gf2SymMatrix sample_symmetric_matrix(std::size_t n, Lcg64& rng);

/// A vf-safe delta-matroid on n elements: D(C) for a sampled symmetric C,
/// pushed through a sampled canonical-word assignment. The group action
/// preserves vf-safety, so samples stay in the class; sweeps that rely on
/// the hypothesis re-verify it per sample.
SetSystem sample_vf_safe_delta_matroid(std::size_t n, Lcg64& rng);

struct Witness {
    std::string property;
    std::string description;
    std::string serialized;  ///< offending instance in its text format
};

/// Searches the property's domain in canonical order and returns the first
/// violating instance, or nothing. Deterministic for a fixed budget and seed.
/// Throws on an unknown property id.
std::optional<Witness> counterexample_search(std::string_view property_id,
                                             const EnumerationBudget& budget);

/// Ids accepted by counterexample_search.
const std::vector<std::string>& registered_properties();

}  // namespace twuality
