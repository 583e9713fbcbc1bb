#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/rational.hpp>

#include "helpers.hpp"
#include "twuality/enumeration.hpp"
#include "twuality/errors.hpp"
#include "twuality/width_polynomial.hpp"

using namespace twuality;
using twuality::testing::mask;
using twuality::testing::sys;

namespace {

WidthPolynomial poly(const SetSystem& d, const char* word) {
    return twuality_polynomial(d, TwualWord::parse(word));
}

std::vector<SetSystem> vf_safe_delta_matroids(int n) {
    std::vector<SetSystem> out;
    for (const SetSystem& d : enumerate_delta_matroids(n)) {
        if (is_vf_safe(d)) out.push_back(d);
    }
    return out;
}

}  // namespace

TEST_CASE("reference polynomial values") {
    CHECK(poly(sys(1, {{}, {1}}), "*x") == WidthPolynomial({1, 1}, 1));
    CHECK(poly(sys(1, {{}, {1}}), "x*") == WidthPolynomial({1, 1}, 1));
    CHECK(poly(sys(1, {{}}), "*x") == WidthPolynomial({2}, 1));
    CHECK(poly(sys(1, {{1}}), "x*") == WidthPolynomial({2}, 1));
    CHECK(poly(sys(2, {{}, {1, 2}}), "*") == WidthPolynomial({2, 0, 2}, 2));
    CHECK(poly(sys(2, {{}, {1}, {1, 2}}), "*x") == WidthPolynomial({1, 0, 3}, 2));
    CHECK(poly(sys(2, {{}, {1}, {1, 2}}), "x*") == WidthPolynomial({1, 0, 3}, 2));
    CHECK(poly(sys(1, {{1}}), "x") == WidthPolynomial({2}, 1));
    CHECK(poly(sys(2, {{1, 2}}), "x") == WidthPolynomial({4}, 2));
    CHECK(poly(sys(3, {{1, 2, 3}}), "x") == WidthPolynomial({8}, 3));
}

TEST_CASE("identity word counts every subset at the base width") {
    const SetSystem d = sys(2, {{}, {1}, {1, 2}});
    CHECK(poly(d, "") == WidthPolynomial({0, 0, 4}, 2));
}

TEST_CASE("polynomial input contracts") {
    CHECK_THROWS_WITH_AS(poly(sys(2, {}), "*"), "improper set system", error);
    CHECK_THROWS_AS(twuality_polynomial(sys(2, {{}}), TwualWord::parse("*"), 1, 1), error);
    CHECK_THROWS_AS(WidthPolynomial({1, 1}, 3), error);    // sums to 2, needs 8
    CHECK_THROWS_AS(WidthPolynomial({2, 1, 1}, 1), error); // degree above n
}

TEST_CASE("evaluation") {
    const WidthPolynomial one_plus_z({1, 1}, 1);
    CHECK(evaluate(one_plus_z, std::int64_t{1}) == 2);
    CHECK(evaluate(WidthPolynomial({2, 0, 2}, 2), std::int64_t{1}) == 4);
    CHECK(evaluate(WidthPolynomial({1, 0, 3}, 2), std::int64_t{0}) == 1);
    using rational = boost::rational<std::int64_t>;
    CHECK(evaluate(one_plus_z, rational(1, 2)) == rational(3, 2));
    CHECK(evaluate(WidthPolynomial({2, 0, 2}, 2), rational(1, 3)) == rational(20, 9));
}

TEST_CASE("human-readable form") {
    CHECK(WidthPolynomial({1, 1}, 1).str() == "1 + z");
    CHECK(WidthPolynomial({2, 0, 2}, 2).str() == "2 + 2 z^2");
    CHECK(WidthPolynomial({1, 0, 3}, 2).str() == "1 + 3 z^2");
    CHECK(WidthPolynomial({8}, 3).str() == "8");
    CHECK(WidthPolynomial({0, 0, 4}, 2).str() == "4 z^2");
    CHECK(WidthPolynomial({0, 2}, 1).str() == "2 z");
    CHECK(WidthPolynomial({1, 2, 1}, 2).str() == "1 + 2 z + z^2");
}

TEST_CASE("products track direct sums") {
    CHECK(WidthPolynomial({1, 1}, 1) * WidthPolynomial({1, 1}, 1) ==
          WidthPolynomial({1, 2, 1}, 2));
    for (const SetSystem& a : enumerate_proper_set_systems(2)) {
        const SetSystem b = SetSystem({"x", "y"}, a.family());
        for (const TwualWord& word : TwualWord::canonical()) {
            CHECK(twuality_polynomial(direct_sum(a, b), word) ==
                  twuality_polynomial(a, word) * twuality_polynomial(b, word));
        }
    }
}

TEST_CASE("gap profiles") {
    CHECK(gap_profile(WidthPolynomial({2, 0, 2}, 2)) == GapProfile{false, 1});
    CHECK(gap_profile(WidthPolynomial({1, 1}, 1)) == GapProfile{true, 0});
    CHECK(gap_profile(WidthPolynomial({1, 0, 3}, 2)) == GapProfile{false, 1});
    CHECK(gap_profile(WidthPolynomial({8}, 3)) == GapProfile{true, 0});
    // the zero polynomial is representable only above the checked sizes
    CHECK_THROWS_AS(gap_profile(WidthPolynomial(std::vector<std::int64_t>(64, 0), 63)), error);
}

TEST_CASE("log-concavity") {
    CHECK(log_concavity(WidthPolynomial({1, 1}, 1)));
    CHECK_FALSE(log_concavity(WidthPolynomial({2, 0, 2}, 2)));
    CHECK(log_concavity(WidthPolynomial({8}, 3)));
}

TEST_CASE("monomial characterization probes") {
    const auto full = monomial_check(sys(2, {{1, 2}}), TwualWord::parse("x"));
    CHECK(full.is_monomial);
    CHECK(full.characterization_holds);
    const auto empty = monomial_check(sys(2, {{}}), TwualWord::parse("*x*"));
    CHECK(empty.is_monomial);
    CHECK(empty.characterization_holds);
    const auto mixed = monomial_check(sys(1, {{}, {1}}), TwualWord::parse("x"));
    CHECK_FALSE(mixed.is_monomial);
    CHECK(mixed.characterization_holds);
    CHECK_THROWS_AS(monomial_check(sys(1, {{}}), TwualWord::parse("*")), error);
    CHECK_THROWS_AS(monomial_check(sys(1, {{}}), TwualWord::parse("*x")), error);
}

TEST_CASE("the subset sweep matches width measurements through the public operations") {
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            for (const TwualWord& word : TwualWord::canonical()) {
                std::vector<std::int64_t> expected(static_cast<std::size_t>(n) + 1, 0);
                for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
                    const int w = width_stats(apply_word(d, word, SubsetMask(a))).width;
                    ++expected[static_cast<std::size_t>(w)];
                }
                CHECK(twuality_polynomial(d, word) ==
                      WidthPolynomial(expected, static_cast<std::size_t>(n)));
            }
        }
    }
}

TEST_CASE("the sweep stays exact past six elements") {
    // elements 6 and 7 exercise the whole-word block shuffles of the sweep
    Lcg64 rng(314159);
    for (const std::size_t n : {7u, 8u}) {
        const SetSystem d = sample_vf_safe_delta_matroid(n, rng);
        for (const TwualWord& word : TwualWord::canonical()) {
            std::vector<std::int64_t> expected(n + 1, 0);
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
                ++expected[static_cast<std::size_t>(
                    width_stats(apply_word(d, word, SubsetMask(a))).width)];
            }
            CHECK(twuality_polynomial(d, word) == WidthPolynomial(expected, n));
        }
    }
}

TEST_CASE("total count and degree bound") {
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            for (const TwualWord& word : TwualWord::canonical()) {
                const WidthPolynomial p = twuality_polynomial(d, word);
                CHECK(evaluate(p, std::int64_t{1}) == std::int64_t{1} << n);
                CHECK(p.degree() <= static_cast<std::size_t>(n));
            }
        }
    }
}

TEST_CASE("partial duality leaves the polynomial alone for *, x and *x*") {
    const std::vector<TwualWord> invariant_words = {
        TwualWord::parse("*"), TwualWord::parse("x"), TwualWord::parse("*x*")};
    for (int n = 1; n <= 2; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            for (const TwualWord& word : invariant_words) {
                for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
                    CHECK(twuality_polynomial(apply_word(d, word, SubsetMask(a)), word) ==
                          twuality_polynomial(d, word));
                }
            }
        }
    }
}

TEST_CASE("...but not for *x and x*") {
    const SetSystem d = sys(1, {{}, {1}});
    const SetSystem d_sx = apply_word(d, TwualWord::parse("*x"), mask({1}));
    const SetSystem d_xs = apply_word(d, TwualWord::parse("x*"), mask({1}));
    CHECK(poly(d, "*x") == WidthPolynomial({1, 1}, 1));
    CHECK(poly(d_sx, "*x") == WidthPolynomial({2}, 1));
    CHECK(poly(d, "*x") != poly(d_sx, "*x"));
    CHECK(poly(d, "x*") != poly(d_xs, "x*"));
}

TEST_CASE("conjugating a word matches twisting the system") {
    const auto conjugate = [](const TwualWord& word) {
        auto letters = TwualWord::parse("*").letters();
        letters.insert(letters.end(), word.letters().begin(), word.letters().end());
        letters.push_back(TwualLetter::star);
        return TwualWord(letters);
    };
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : enumerate_proper_set_systems(n)) {
            const SetSystem dual = twist(d, d.ground_mask());
            for (const TwualWord& word : TwualWord::canonical()) {
                CHECK(twuality_polynomial(d, conjugate(word)) ==
                      twuality_polynomial(dual, word));
            }
        }
    }
}

TEST_CASE("interpolation and gap bounds for small vf-safe delta-matroids") {
    for (int n = 1; n <= 3; ++n) {
        for (const SetSystem& d : vf_safe_delta_matroids(n)) {
            CHECK(gap_profile(poly(d, "x")).is_interpolating);
            CHECK(gap_profile(poly(d, "*x*")).is_interpolating);
            for (const TwualWord& word : TwualWord::canonical()) {
                CHECK(gap_profile(twuality_polynomial(d, word)).max_gap <= 1);
            }
        }
    }
}

TEST_CASE("sweeps are independent of the job count") {
    const SetSystem d = sys(4, {{}, {1}, {2, 3}, {1, 2, 3, 4}});
    const WidthPolynomial sequential = twuality_polynomial(d, TwualWord::parse("x*"), 1);
    for (const unsigned jobs : {2u, 3u, 8u, 0u}) {
        CHECK(twuality_polynomial(d, TwualWord::parse("x*"), jobs) == sequential);
    }
}
