#pragma once

// Internal operations on bare feasible-set families (canonically sorted mask
// vectors), so hot subset sweeps can twist and loop-complement without
// touching element names or re-validating invariants.

#include <algorithm>
#include <vector>

#include "twuality/subset.hpp"
#include "twuality/words.hpp"

namespace twuality::detail {

using Family = std::vector<SubsetMask>;

inline bool mask_less(SubsetMask a, SubsetMask b) { return canonical_less(a, b); }

inline void canonical_sort(Family& family) {
    std::sort(family.begin(), family.end(), mask_less);
}

// {f ^ a : f in family}; the XOR scrambles the order, so re-sort.
inline Family twist_family(const Family& family, SubsetMask a) {
    Family next;
    next.reserve(family.size());
    for (const SubsetMask f : family) next.push_back(f ^ a);
    canonical_sort(next);
    return next;
}

// F' = F symmetric-difference {f + e : f in F, e not in f}; sortedness is
// preserved by merging the toggle list back in.
inline void loop_complement_in_place(Family& family, std::size_t e) {
    Family toggles;
    for (const SubsetMask f : family) {
        if (!f.test(e)) toggles.push_back(f.with(e));
    }
    canonical_sort(toggles);
    Family next;
    next.reserve(family.size() + toggles.size());
    std::set_symmetric_difference(family.begin(), family.end(), toggles.begin(), toggles.end(),
                                  std::back_inserter(next), mask_less);
    family = std::move(next);
}

inline Family apply_word_family(Family family, const TwualWord& word, SubsetMask subset) {
    for_each_element(subset, [&](std::size_t e) {
        for (const TwualLetter letter : word.letters()) {
            if (letter == TwualLetter::star) {
                family = twist_family(family, SubsetMask::single(e));
            } else {
                loop_complement_in_place(family, e);
            }
        }
    });
    return family;
}

// width of a nonempty canonical family: sizes are sorted, so look at the ends
inline int family_width(const Family& family) {
    return family.back().size() - family.front().size();
}

}  // namespace twuality::detail
