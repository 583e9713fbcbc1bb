#include "twuality/set_system.hpp"

#include <algorithm>
#include <unordered_set>

#include "family_ops.hpp"
#include "small_family.hpp"
#include "twuality/errors.hpp"

namespace twuality {
namespace {

void canonicalize(std::vector<SubsetMask>& family) {
    std::sort(family.begin(), family.end(),
              [](SubsetMask a, SubsetMask b) { return canonical_less(a, b); });
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool valid_name(const std::string& name) {
    if (name.empty() || name == "-" || name[0] == '#') return false;
    for (const char c : name) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
    }
    return true;
}

}  // namespace

SetSystem::SetSystem(std::vector<std::string> element_names, std::vector<SubsetMask> family)
    : names_(std::move(element_names)), family_(std::move(family)) {
    if (names_.size() > max_ground_size) {
        throw error("ground set exceeds " + std::to_string(max_ground_size) + " elements");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (!valid_name(name)) {
            throw error("invalid element name '" + name + "'");
        }
        if (!seen.insert(name).second) {
            throw error("duplicate element name '" + name + "'");
        }
    }
    const SubsetMask ground = SubsetMask::full(names_.size());
    for (const SubsetMask s : family_) {
        if (!ground.contains(s)) {
            throw error("feasible set uses elements outside the ground set");
        }
    }
    canonicalize(family_);
}

SetSystem SetSystem::over(std::size_t n, std::vector<SubsetMask> family) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    return SetSystem(std::move(names), std::move(family));
}

bool SetSystem::is_feasible(SubsetMask subset) const {
    return std::binary_search(family_.begin(), family_.end(), subset,
                              [](SubsetMask a, SubsetMask b) { return canonical_less(a, b); });
}

SetSystem twist(const SetSystem& system, SubsetMask subset) {
    if (!subset.within(system.ground_size())) {
        throw error("twist subset outside the ground set");
    }
    return SetSystem(system, detail::twist_family(system.family(), subset),
                     SetSystem::canonical_tag{});
}

SetSystem loop_complement(const SetSystem& system, SubsetMask subset) {
    if (!subset.within(system.ground_size())) {
        throw error("loop complementation subset outside the ground set");
    }
    detail::Family family = system.family();
    for_each_element(subset, [&](std::size_t e) { detail::loop_complement_in_place(family, e); });
    return SetSystem(system, std::move(family), SetSystem::canonical_tag{});
}

SetSystem apply_word(const SetSystem& system, const TwualWord& word, SubsetMask subset) {
    if (!subset.within(system.ground_size())) {
        throw error("word application subset outside the ground set");
    }
    return SetSystem(system, detail::apply_word_family(system.family(), word, subset),
                     SetSystem::canonical_tag{});
}

SetSystem direct_sum(const SetSystem& first, const SetSystem& second) {
    std::vector<std::string> names = first.element_names();
    for (const auto& name : second.element_names()) {
        if (std::find(names.begin(), names.end(), name) != names.end()) {
            throw error("direct sum: element name '" + name + "' occurs in both ground sets");
        }
        names.push_back(name);
    }
    const std::size_t offset = first.ground_size();
    std::vector<SubsetMask> family;
    family.reserve(first.family().size() * second.family().size());
    for (const SubsetMask f : first.family()) {
        for (const SubsetMask g : second.family()) {
            family.push_back(f | SubsetMask(g.bits() << offset));
        }
    }
    return SetSystem(std::move(names), std::move(family));
}

WidthStats width_stats(const SetSystem& system) {
    if (!system.proper()) {
        throw error("improper set system");
    }
    // canonical order sorts by size first
    const int r_min = system.family().front().size();
    const int r_max = system.family().back().size();
    return {r_min, r_max, r_max - r_min};
}

std::pair<std::vector<SubsetMask>, std::vector<SubsetMask>>
feasible_strata(const SetSystem& system, int i) {
    const WidthStats stats = width_stats(system);
    if (i < 0 || i > stats.width) {
        throw error("stratum index " + std::to_string(i) + " exceeds width " +
                    std::to_string(stats.width));
    }
    std::vector<SubsetMask> lower, upper;
    for (const SubsetMask f : system.family()) {
        if (f.size() == stats.r_min + i) lower.push_back(f);
        if (f.size() == stats.r_max - i) upper.push_back(f);
    }
    return {std::move(lower), std::move(upper)};
}

SetSystemPredicates predicates(const SetSystem& system) {
    return {system.proper(), system.normal(), system.dual_normal()};
}

bool is_delta_matroid(const SetSystem& system) {
    if (!system.proper()) return false;
    if (system.ground_size() <= detail::small_family_max_n) {
        return detail::small_is_delta_matroid(detail::to_small(system));
    }
    const auto& family = system.family();
    for (const SubsetMask x : family) {
        for (const SubsetMask y : family) {
            const SubsetMask diff = x ^ y;
            bool failed = false;
            for_each_element(diff, [&](std::size_t u) {
                if (failed) return;
                bool exchanged = false;
                for_each_element(diff, [&](std::size_t v) {
                    if (exchanged) return;
                    if (system.is_feasible(x ^ (SubsetMask::single(u) | SubsetMask::single(v)))) {
                        exchanged = true;
                    }
                });
                if (!exchanged) failed = true;
            });
            if (failed) return false;
        }
    }
    return true;
}

namespace {

// Generic fallback for ground sets too large for the one-word family
// representation; same assignment tree, pruned at every node.
bool vf_safe_from(const SetSystem& system, std::size_t e) {
    if (!is_delta_matroid(system)) return false;
    const auto& canonical = TwualWord::canonical();
    for (; e < system.ground_size(); ++e) {
        for (std::size_t w = 1; w < canonical.size(); ++w) {
            if (!vf_safe_from(apply_word(system, canonical[w], SubsetMask::single(e)), e + 1)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_vf_safe(const SetSystem& system) {
    if (system.ground_size() <= detail::small_family_max_n) {
        return detail::small_is_vf_safe(detail::to_small(system));
    }
    return vf_safe_from(system, 0);
}

}  // namespace twuality
