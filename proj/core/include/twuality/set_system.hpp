#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twuality/subset.hpp"
#include "twuality/words.hpp"

namespace twuality {

/// A ground set of named elements together with a family of feasible subsets.
/// The family is kept canonical (sorted by size then value, no duplicates),
/// so two set systems are equal exactly when their fields compare equal.
/// Values are immutable after construction.
class SetSystem {
public:
    /// Builds a set system; the family is canonicalized. Throws on duplicate
    /// or malformed element names and on masks outside the ground set.
    SetSystem(std::vector<std::string> element_names, std::vector<SubsetMask> family);

    /// Convenience: elements named "1", "2", ..., "n".
    static SetSystem over(std::size_t n, std::vector<SubsetMask> family);

    std::size_t ground_size() const { return names_.size(); }
    const std::vector<std::string>& element_names() const { return names_; }
    const std::vector<SubsetMask>& family() const { return family_; }
    SubsetMask ground_mask() const { return SubsetMask::full(names_.size()); }

    bool is_feasible(SubsetMask subset) const;

    bool proper() const { return !family_.empty(); }
    bool normal() const { return !family_.empty() && family_.front().empty(); }
    bool dual_normal() const { return is_feasible(ground_mask()); }

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
    struct canonical_tag {};
    // Fast path for operations that derive a new family from an existing
    // system: names are known valid, the family is already canonical.
    SetSystem(const SetSystem& base, std::vector<SubsetMask> canonical_family, canonical_tag)
        : names_(base.names_), family_(std::move(canonical_family)) {}

    friend SetSystem twist(const SetSystem&, SubsetMask);
    friend SetSystem loop_complement(const SetSystem&, SubsetMask);
    friend SetSystem apply_word(const SetSystem&, const TwualWord&, SubsetMask);

    std::vector<std::string> names_;
    std::vector<SubsetMask> family_;
};

struct WidthStats {
    int r_min = 0;
    int r_max = 0;
    int width = 0;

    friend bool operator==(const WidthStats&, const WidthStats&) = default;
};

struct SetSystemPredicates {
    bool proper = false;
    bool normal = false;
    bool dual_normal = false;

    friend bool operator==(const SetSystemPredicates&, const SetSystemPredicates&) = default;
};

/// Replaces every feasible set F by F ^ A. The full twist (A = E) is the *-dual.
SetSystem twist(const SetSystem& system, SubsetMask subset);

/// Loop complementation on A, applied element by element in ascending index
/// order: for each e and each feasible F avoiding e, toggles feasibility of
/// F + e. The per-element operations commute, so the order does not matter.
SetSystem loop_complement(const SetSystem& system, SubsetMask subset);

/// For each element of A, applies the letters of the word left to right to
/// that single element. Operators at different elements commute.
SetSystem apply_word(const SetSystem& system, const TwualWord& word, SubsetMask subset);

/// Disjoint union of ground sets; feasible sets are all unions of one
/// feasible set from each operand. Throws on an element-name collision.
SetSystem direct_sum(const SetSystem& first, const SetSystem& second);

/// Minimum and maximum feasible-set sizes and their difference.
/// Throws on an improper system: width is undefined without feasible sets.
WidthStats width_stats(const SetSystem& system);

/// The feasible sets of size r_min + i and of size r_max - i.
/// Throws when the system is improper or i exceeds the width.
std::pair<std::vector<SubsetMask>, std::vector<SubsetMask>>
feasible_strata(const SetSystem& system, int i);

SetSystemPredicates predicates(const SetSystem& system);

/// Symmetric exchange axiom, checked exhaustively: for all feasible X, Y and
/// every u in X^Y there is v in X^Y with X^{u,v} feasible. Improper systems
/// are not delta-matroids.
bool is_delta_matroid(const SetSystem& system);

/// True when every assignment of one of the six canonical words to each
/// ground-set element yields a delta-matroid. Per-element operators generate
/// S3 and commute across elements, so these 6^n images are exactly the images
/// of all twist / loop-complementation sequences. Cost grows as 6^n.
bool is_vf_safe(const SetSystem& system);

}  // namespace twuality
