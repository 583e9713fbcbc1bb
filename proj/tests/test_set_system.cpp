#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "twuality/enumeration.hpp"
#include "twuality/errors.hpp"
#include "twuality/set_system.hpp"

using namespace twuality;
using twuality::testing::mask;
using twuality::testing::sys;

namespace {

// Independent statement of the symmetric exchange axiom over plain set
// containers; deliberately ignorant of the library's representation.
bool exchange_axiom_holds(const SetSystem& d) {
    std::vector<std::set<int>> family;
    for (const SubsetMask f : d.family()) {
        std::set<int> s;
        for (std::size_t e = 0; e < d.ground_size(); ++e) {
            if (f.test(e)) s.insert(static_cast<int>(e));
        }
        family.push_back(std::move(s));
    }
    if (family.empty()) return false;
    const auto feasible = [&](const std::set<int>& s) {
        return std::find(family.begin(), family.end(), s) != family.end();
    };
    const auto sym_diff = [](std::set<int> a, const std::set<int>& b) {
        for (const int e : b) {
            if (!a.erase(e)) a.insert(e);
        }
        return a;
    };
    for (const auto& x : family) {
        for (const auto& y : family) {
            for (const int u : sym_diff(x, y)) {
                bool exchanged = false;
                for (const int v : sym_diff(x, y)) {
                    if (feasible(sym_diff(x, {u, v}))) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) return false;
            }
        }
    }
    return true;
}

// Closure of {D} under all single-element twists and loop complementations;
// vf-safety by definition: every reachable system is a delta-matroid.
bool vf_safe_by_closure(const SetSystem& d) {
    std::set<std::vector<std::uint64_t>> seen;
    const auto key = [](const SetSystem& s) {
        std::vector<std::uint64_t> k;
        for (const SubsetMask f : s.family()) k.push_back(f.bits());
        return k;
    };
    std::vector<SetSystem> frontier{d};
    seen.insert(key(d));
    while (!frontier.empty()) {
        std::vector<SetSystem> next;
        for (const SetSystem& s : frontier) {
            if (!is_delta_matroid(s)) return false;
            for (std::size_t e = 0; e < s.ground_size(); ++e) {
                for (const SetSystem& image :
                     {twist(s, SubsetMask::single(e)), loop_complement(s, SubsetMask::single(e))}) {
                    if (seen.insert(key(image)).second) next.push_back(image);
                }
            }
        }
        frontier = std::move(next);
    }
    return true;
}

}  // namespace

TEST_CASE("construction canonicalizes the family") {
    const SetSystem d = SetSystem::over(2, {mask({1, 2}), mask({1}), mask({}), mask({1})});
    REQUIRE(d.family().size() == 3);
    CHECK(d.family()[0] == mask({}));
    CHECK(d.family()[1] == mask({1}));
    CHECK(d.family()[2] == mask({1, 2}));
    CHECK(d.is_feasible(mask({1})));
    CHECK_FALSE(d.is_feasible(mask({2})));
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(SetSystem({"a", "a"}, {}), error);
    CHECK_THROWS_AS(SetSystem({"a", "-"}, {}), error);
    CHECK_THROWS_AS(SetSystem({"a b"}, {}), error);
    CHECK_THROWS_AS(SetSystem({"a"}, {mask({1, 2})}), error);
}

TEST_CASE("twist examples") {
    CHECK(twist(sys(1, {{}, {1}}), mask({1})) == sys(1, {{}, {1}}));
    CHECK(twist(sys(2, {{}, {1, 2}}), mask({1})) == sys(2, {{1}, {2}}));
    CHECK(twist(sys(1, {{}}), mask({1})) == sys(1, {{1}}));
    CHECK_THROWS_AS(twist(sys(1, {{}}), mask({2})), error);
}

TEST_CASE("loop complementation examples") {
    CHECK(loop_complement(sys(1, {{}, {1}}), mask({1})) == sys(1, {{}}));
    CHECK(loop_complement(sys(1, {{}}), mask({1})) == sys(1, {{}, {1}}));
    // two-element application agrees with the parity oracle
    const SetSystem d = sys(2, {{}, {1}, {1, 2}});
    const SetSystem image = loop_complement(d, mask({1, 2}));
    for (std::uint64_t y = 0; y < 4; ++y) {
        CHECK(image.is_feasible(SubsetMask(y)) ==
              loop_complement_oracle(d, mask({1, 2}), SubsetMask(y)));
    }
}

TEST_CASE("word application examples") {
    const SetSystem d = sys(1, {{}, {1}});
    CHECK(apply_word(d, TwualWord::parse("*x"), mask({1})) == sys(1, {{}}));
    CHECK(apply_word(d, TwualWord::parse("x*"), mask({1})) == sys(1, {{1}}));
    const SetSystem d2 = sys(2, {{1}, {1, 2}});
    CHECK(apply_word(d2, TwualWord::parse("**"), mask({1, 2})) == d2);
    CHECK(apply_word(d2, TwualWord::parse(""), mask({1})) == d2);
}

TEST_CASE("direct sum examples") {
    const SetSystem a = SetSystem({"1"}, {mask({})});
    const SetSystem b = SetSystem({"2"}, {mask({1})});
    const SetSystem sum = direct_sum(a, b);
    CHECK(sum == SetSystem({"1", "2"}, {mask({2})}));

    const SetSystem c = direct_sum(SetSystem({"1"}, {mask({}), mask({1})}),
                                   SetSystem({"2"}, {mask({}), mask({1})}));
    CHECK(c == sys(2, {{}, {1}, {2}, {1, 2}}));
    CHECK(width_stats(c).width ==
          width_stats(sys(1, {{}, {1}})).width + width_stats(sys(1, {{}, {1}})).width);

    CHECK_THROWS_AS(direct_sum(a, a), error);
}

TEST_CASE("width statistics") {
    CHECK(width_stats(sys(2, {{}, {1, 2}})) == WidthStats{0, 2, 2});
    CHECK(width_stats(sys(1, {{1}})).width == 0);
    CHECK(width_stats(sys(2, {{}, {1}, {1, 2}})).width == 2);
    CHECK_THROWS_WITH_AS(width_stats(sys(1, {})), "improper set system", error);
}

TEST_CASE("feasible strata") {
    const auto [lo1, hi1] = feasible_strata(sys(2, {{}, {1, 2}}), 1);
    CHECK(lo1.empty());
    CHECK(hi1.empty());
    const auto [lo2, hi2] = feasible_strata(sys(2, {{}, {1}, {1, 2}}), 0);
    CHECK(lo2 == std::vector<SubsetMask>{mask({})});
    CHECK(hi2 == std::vector<SubsetMask>{mask({1, 2})});
    const auto [lo3, hi3] = feasible_strata(sys(1, {{}, {1}}), 1);
    CHECK(lo3 == std::vector<SubsetMask>{mask({1})});
    CHECK(hi3 == std::vector<SubsetMask>{mask({})});
    CHECK_THROWS_AS(feasible_strata(sys(2, {{}, {1, 2}}), 3), error);
    CHECK_THROWS_AS(feasible_strata(sys(2, {{}, {1, 2}}), -1), error);
    CHECK_THROWS_AS(feasible_strata(sys(2, {}), 0), error);
}

TEST_CASE("predicates") {
    CHECK(predicates(sys(1, {{}, {1}})) == SetSystemPredicates{true, true, true});
    CHECK(predicates(sys(1, {{}})) == SetSystemPredicates{true, true, false});
    CHECK(predicates(sys(1, {})) == SetSystemPredicates{false, false, false});
}

TEST_CASE("delta-matroid recognition examples") {
    CHECK_FALSE(is_delta_matroid(sys(3, {{1}, {2, 3}})));
    CHECK(is_delta_matroid(sys(1, {{}, {1}})));
    CHECK(is_delta_matroid(sys(2, {{}, {1, 2}})));
    CHECK_FALSE(is_delta_matroid(sys(1, {})));
}

TEST_CASE("recognition agrees with an independent statement of the axiom") {
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            CHECK(is_delta_matroid(d) == exchange_axiom_holds(d));
        }
    }
}

TEST_CASE("vf-safe examples") {
    CHECK(is_vf_safe(sys(1, {{}, {1}})));
    CHECK_FALSE(is_vf_safe(sys(1, {})));
    CHECK_FALSE(is_vf_safe(sys(3, {{1}, {2, 3}})));  // not even a delta-matroid
    // past six elements the word-sized fast path no longer applies
    CHECK_FALSE(is_vf_safe(sys(7, {{1}, {2, 3}})));
    CHECK_FALSE(is_delta_matroid(sys(7, {{1}, {2, 3}})));
    CHECK(is_delta_matroid(sys(7, {{1}, {2}, {3}})));
}

TEST_CASE("vf-safe agrees with closure search") {
    for (int n = 1; n <= 2; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            CHECK(is_vf_safe(d) == vf_safe_by_closure(d));
        }
    }
    // a non-vf-safe delta-matroid needs three elements
    int safe = 0, unsafe = 0;
    for (const SetSystem& d : enumerate_delta_matroids(3)) {
        (is_vf_safe(d) ? safe : unsafe) += 1;
        CHECK(is_vf_safe(d) == vf_safe_by_closure(d));
    }
    CHECK(safe == 147);
    CHECK(unsafe == 8);
}

TEST_CASE("twist and loop complementation are involutions") {
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
                const SubsetMask subset(a);
                CHECK(twist(twist(d, subset), subset) == d);
                CHECK(loop_complement(loop_complement(d, subset), subset) == d);
            }
        }
    }
}

TEST_CASE("operators at different elements commute") {
    const auto star = TwualWord::parse("*");
    const auto cross = TwualWord::parse("x");
    for (const SetSystem& d : enumerate_proper_set_systems(3)) {
        for (std::size_t e = 0; e < 3; ++e) {
            for (std::size_t f = 0; f < 3; ++f) {
                if (e == f) continue;
                for (const auto& first : {star, cross}) {
                    for (const auto& second : {star, cross}) {
                        const SetSystem ef = apply_word(
                            apply_word(d, first, SubsetMask::single(e)), second,
                            SubsetMask::single(f));
                        const SetSystem fe = apply_word(
                            apply_word(d, second, SubsetMask::single(f)), first,
                            SubsetMask::single(e));
                        CHECK(ef == fe);
                    }
                }
            }
        }
    }
}

TEST_CASE("group relations on set systems") {
    const auto sxsxsx = TwualWord::parse("*x*x*x");
    for (const SetSystem& d : enumerate_proper_set_systems(2)) {
        for (std::size_t e = 0; e < 2; ++e) {
            CHECK(apply_word(d, sxsxsx, SubsetMask::single(e)) == d);
        }
        // literal application equals application of the normalized word
        for (const char* spelling : {"xx", "x*x", "*xx*", "x*x*", "*x*x", "x**x*x"}) {
            const TwualWord word = TwualWord::parse(spelling);
            for (std::uint64_t a = 0; a < 4; ++a) {
                CHECK(apply_word(d, word, SubsetMask(a)) ==
                      apply_word(d, normalize_word(word), SubsetMask(a)));
            }
        }
    }
}

TEST_CASE("minimum stratum survives loop complementation, maximum survives *x*") {
    const auto sxs = TwualWord::parse("*x*");
    const auto xsx = TwualWord::parse("x*x");
    for (const SetSystem& d : enumerate_proper_set_systems(3)) {
        for (std::uint64_t a = 0; a < 8; ++a) {
            const SubsetMask subset(a);
            CHECK(feasible_strata(d, 0).first ==
                  feasible_strata(loop_complement(d, subset), 0).first);
            CHECK(feasible_strata(d, 0).second ==
                  feasible_strata(apply_word(d, sxs, subset), 0).second);
            CHECK(feasible_strata(d, 0).second ==
                  feasible_strata(apply_word(d, xsx, subset), 0).second);
        }
    }
}

TEST_CASE("delta-matroids are closed under twist") {
    for (int n = 1; n <= 4; ++n) {
        for (const SetSystem& d : enumerate_delta_matroids(n)) {
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
                CHECK(is_delta_matroid(twist(d, SubsetMask(a))));
            }
        }
    }
}

TEST_CASE("feasible-set sizes of a delta-matroid have gaps of at most two") {
    for (int n = 1; n <= 4; ++n) {
        for (const SetSystem& d : enumerate_delta_matroids(n)) {
            std::vector<int> sizes;
            for (const SubsetMask f : d.family()) sizes.push_back(f.size());
            sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
            for (std::size_t k = 1; k < sizes.size(); ++k) {
                CHECK(sizes[k] - sizes[k - 1] <= 2);
            }
        }
    }
}

TEST_CASE("duals at a minimum feasible set are normal, at a co-minimum dual normal") {
    const std::vector<TwualWord> normalizing = {
        TwualWord::parse("*"), TwualWord::parse("*x"), TwualWord::parse("x*"),
        TwualWord::parse("*x*")};
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            for (const SubsetMask a : feasible_strata(d, 0).first) {
                for (const TwualWord& word : normalizing) {
                    CHECK(apply_word(d, word, a).normal());
                }
            }
            const SetSystem dual = twist(d, d.ground_mask());
            for (const SubsetMask b : feasible_strata(dual, 0).first) {
                CHECK(loop_complement(d, b).dual_normal());
            }
        }
    }
}

TEST_CASE("equal minimum rank after a twist forces equal minimum strata on delta-matroids") {
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : enumerate_delta_matroids(n)) {
            for (std::size_t e = 0; e < d.ground_size(); ++e) {
                const SetSystem image = twist(d, SubsetMask::single(e));
                if (width_stats(d).r_min == width_stats(image).r_min) {
                    CHECK(feasible_strata(d, 0).first == feasible_strata(image, 0).first);
                }
            }
        }
    }
    // ...but not on general set systems
    const SetSystem counter = sys(3, {{1}, {2, 3}});
    REQUIRE_FALSE(is_delta_matroid(counter));
    const SetSystem image = twist(counter, mask({2}));
    CHECK(width_stats(counter).r_min == width_stats(image).r_min);
    CHECK(feasible_strata(counter, 0).first != feasible_strata(image, 0).first);
    CHECK(feasible_strata(counter, 0).first == std::vector<SubsetMask>{mask({1})});
    CHECK(feasible_strata(image, 0).first == std::vector<SubsetMask>{mask({3})});
}

TEST_CASE("every feasible set sits between a minimum and a maximum one") {
    for (int n = 1; n <= 4; ++n) {
        for (const SetSystem& d : enumerate_delta_matroids(n)) {
            const auto mins = feasible_strata(d, 0).first;
            const auto maxs = feasible_strata(d, 0).second;
            for (const SubsetMask x : d.family()) {
                const bool below = std::any_of(mins.begin(), mins.end(),
                                               [&](SubsetMask a) { return x.contains(a); });
                const bool above = std::any_of(maxs.begin(), maxs.end(),
                                               [&](SubsetMask b) { return b.contains(x); });
                CHECK(below);
                CHECK(above);
            }
        }
    }
}
