#include "twuality/width_polynomial.hpp"

#include <numeric>

#include "big_family.hpp"
#include "family_ops.hpp"
#include "twuality/errors.hpp"
#include "twuality/parallel.hpp"

namespace twuality {

WidthPolynomial::WidthPolynomial(std::vector<std::int64_t> coefficients, std::size_t ground_size)
    : coeffs_(std::move(coefficients)), n_(ground_size) {
    if (coeffs_.size() > n_ + 1) {
        throw error("width polynomial degree exceeds the ground-set size");
    }
    coeffs_.resize(n_ + 1, 0);
    std::int64_t sum = 0;
    for (const std::int64_t c : coeffs_) {
        if (c < 0) throw error("width polynomial has a negative coefficient");
        sum += c;
    }
    if (n_ < 63 && sum != (std::int64_t{1} << n_)) {
        throw error("width polynomial coefficients do not sum to 2^n");
    }
}

std::size_t WidthPolynomial::degree() const {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] != 0) return k;
    }
    return 0;
}

std::string WidthPolynomial::str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += std::to_string(coeffs_[k]);
            continue;
        }
        if (coeffs_[k] != 1) {
            out += std::to_string(coeffs_[k]);
            out += ' ';
        }
        out += 'z';
        if (k > 1) {
            out += '^';
            out += std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

WidthPolynomial operator*(const WidthPolynomial& a, const WidthPolynomial& b) {
    const std::size_t n = a.n_ + b.n_;
    if (n >= 63) {
        throw error("polynomial product exceeds the representable ground size");
    }
    std::vector<std::int64_t> coeffs(n + 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return WidthPolynomial(std::move(coeffs), n);
}

GapProfile gap_profile(const WidthPolynomial& p) {
    const auto& c = p.coefficients();
    std::size_t lo = c.size(), hi = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) {
            lo = lo == c.size() ? k : lo;
            hi = k;
        }
    }
    if (lo == c.size()) {
        throw error("gap profile of the zero polynomial");
    }
    int max_gap = 0, run = 0;
    for (std::size_t k = lo; k <= hi; ++k) {
        if (c[k] == 0) {
            ++run;
            if (run > max_gap) max_gap = run;
        } else {
            run = 0;
        }
    }
    return {max_gap == 0, max_gap};
}

bool log_concavity(const WidthPolynomial& p) {
    const auto& c = p.coefficients();
    for (std::size_t k = 1; k + 1 < c.size(); ++k) {
        // coefficients reach 2^n, so the products need 128 bits
        if (static_cast<__int128>(c[k]) * c[k] <
            static_cast<__int128>(c[k - 1]) * c[k + 1]) {
            return false;
        }
    }
    return true;
}

WidthPolynomial twuality_polynomial(const SetSystem& system, const TwualWord& word,
                                    unsigned jobs, std::size_t max_ground) {
    if (!system.proper()) {
        throw error("improper set system");
    }
    const std::size_t n = system.ground_size();
    if (n > max_ground) {
        throw error("ground set of " + std::to_string(n) +
                    " elements exceeds the enumeration cap of " + std::to_string(max_ground));
    }
    const TwualWord canonical = normalize_word(word);
    const std::uint64_t total = std::uint64_t{1} << n;
    const detail::BigFamily base = detail::to_big(system.family(), static_cast<unsigned>(n));
    using Coeffs = std::vector<std::int64_t>;
    Coeffs coeffs = chunked_reduce(
        total, jobs, Coeffs(n + 1, 0),
        [&](std::uint64_t lo, std::uint64_t hi) {
            Coeffs local(n + 1, 0);
            detail::BigFamily image;
            for (std::uint64_t a = lo; a < hi; ++a) {
                image = base;  // every subset is evaluated from D itself
                for_each_element(SubsetMask(a), [&](std::size_t e) {
                    detail::big_apply_word_at(image, canonical, static_cast<unsigned>(e));
                });
                const auto [r_min, r_max] = detail::big_min_max_size(image);
                ++local[static_cast<std::size_t>(r_max - r_min)];
            }
            return local;
        },
        [](Coeffs acc, Coeffs part) {
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += part[k];
            return acc;
        });
    return WidthPolynomial(std::move(coeffs), n);
}

MonomialCheck monomial_check(const SetSystem& system, const TwualWord& word,
                             std::size_t max_ground) {
    const std::size_t index = canonical_index(word);
    if (index != 2 && index != 5) {
        throw error("monomial characterization covers only the words x and *x*");
    }
    const WidthPolynomial p = twuality_polynomial(system, word, 1, max_ground);
    std::size_t nonzero = 0;
    for (const std::int64_t c : p.coefficients()) {
        if (c != 0) ++nonzero;
    }
    const bool is_monomial = nonzero == 1;
    const SubsetMask expected =
        index == 2 ? system.ground_mask() : SubsetMask::empty_set();
    const bool family_is_expected_singleton =
        system.family().size() == 1 && system.family().front() == expected;
    return {is_monomial, is_monomial == family_is_expected_singleton};
}

}  // namespace twuality
