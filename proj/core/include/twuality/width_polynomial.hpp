#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "twuality/set_system.hpp"
#include "twuality/words.hpp"

namespace twuality {

/// Exact integer generating polynomial: coefficient k counts subsets A whose
/// partial dual has width k. Stores all n+1 coefficients; their sum is always
/// 2^n (one term per subset), which the constructor enforces.
class WidthPolynomial {
public:
    WidthPolynomial(std::vector<std::int64_t> coefficients, std::size_t ground_size);

    std::size_t ground_size() const { return n_; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::int64_t coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : 0;
    }
    /// Largest index with a nonzero coefficient.
    std::size_t degree() const;

    /// Human form, e.g. "1 + 3 z^2".
    std::string str() const;

    /// Product; corresponds to the direct sum of the underlying systems.
    friend WidthPolynomial operator*(const WidthPolynomial& a, const WidthPolynomial& b);

    friend bool operator==(const WidthPolynomial&, const WidthPolynomial&) = default;

private:
    std::vector<std::int64_t> coeffs_;
    std::size_t n_ = 0;
};

/// Horner evaluation over any exact number type (integers, rationals).
template <class Number>
Number evaluate(const WidthPolynomial& p, Number z) {
    Number acc(0);
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * z + Number(c[k]);
    }
    return acc;
}

struct GapProfile {
    bool is_interpolating = false;
    int max_gap = 0;

    friend bool operator==(const GapProfile&, const GapProfile&) = default;
};

/// Largest run of zero coefficients strictly inside the support span.
/// Interpolating means nonzero with no gap at all. Throws on the zero
/// polynomial (cannot occur for genuine width polynomials).
GapProfile gap_profile(const WidthPolynomial& p);

/// c_i^2 >= c_{i-1} c_{i+1} for every interior index of the support span.
bool log_concavity(const WidthPolynomial& p);

/// Counts the widths of all 2^n partial duals D^{word|A}. The word is
/// normalized once; each subset is evaluated independently from D (no
/// incremental updates), so the sweep parallelizes cleanly across `jobs`
/// threads with a deterministic result. Throws on improper input or when
/// the ground set exceeds the enumeration cap.
WidthPolynomial twuality_polynomial(const SetSystem& system, const TwualWord& word,
                                    unsigned jobs = 1,
                                    std::size_t max_ground = default_enumeration_cap);

struct MonomialCheck {
    bool is_monomial = false;
    bool characterization_holds = false;
};

/// For a vf-safe delta-matroid and word x (resp. *x*): the polynomial is a
/// monomial exactly when the family is {E} (resp. {empty set}). Returns both
/// the monomial flag and whether the biconditional holds. Throws for words
/// outside {x, *x*}; vf-safety of the input is the caller's obligation.
MonomialCheck monomial_check(const SetSystem& system, const TwualWord& word,
                             std::size_t max_ground = default_enumeration_cap);

}  // namespace twuality
