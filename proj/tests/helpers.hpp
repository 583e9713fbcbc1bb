#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "twuality/set_system.hpp"
#include "twuality/subset.hpp"

namespace twuality::testing {

/// Subset from 1-based element numbers: mask({1, 3}) = {e1, e3}.
inline SubsetMask mask(std::initializer_list<int> elements) {
    SubsetMask m;
    for (const int e : elements) m = m.with(static_cast<std::size_t>(e - 1));
    return m;
}

/// Set system over elements "1".."n" from 1-based feasible sets.
inline SetSystem sys(std::size_t n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<SubsetMask> family;
    for (const auto& s : sets) family.push_back(mask(s));
    return SetSystem::over(n, std::move(family));
}

/// Family as a set of sets of element names; order-insensitive comparison
/// for systems whose ground sets agree only up to reordering.
inline std::set<std::set<std::string>> named_family(const SetSystem& d) {
    std::set<std::set<std::string>> out;
    for (const SubsetMask f : d.family()) {
        std::set<std::string> names;
        for_each_element(f, [&](std::size_t e) { names.insert(d.element_names()[e]); });
        out.insert(std::move(names));
    }
    return out;
}

}  // namespace twuality::testing
