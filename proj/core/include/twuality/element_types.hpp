#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "twuality/set_system.hpp"
#include "twuality/words.hpp"

namespace twuality {

enum class TypeLetter : char { p = 'p', u = 'u', t = 't' };

/// Primal/dual classification of a ground-set element. Primal letter: p when
/// some minimum feasible set contains the element, u when nothing in the two
/// lowest strata does, t otherwise. Dual letters mirror this at the top.
struct ElementType {
    TypeLetter primal = TypeLetter::p;
    TypeLetter dual = TypeLetter::p;

    std::string str() const { return {static_cast<char>(primal), static_cast<char>(dual)}; }

    friend bool operator==(const ElementType&, const ElementType&) = default;
};

/// Classifies element `element` of a proper set system. Throws on improper
/// input. The dual letter always equals the primal letter in the *-dual.
ElementType classify(const SetSystem& system, std::size_t element);

/// Width change w(D^{a|e}) - w(D) predicted for a vf-safe delta-matroid,
/// looked up by element type and the word's canonical class. Throws when the
/// word reduces to the identity (no prediction; the width is unchanged).
int predicted_delta(ElementType type, const TwualWord& word);

struct Table1Row {
    TwualWord word;
    int predicted = 0;
    int measured = 0;
};

struct Table1Report {
    std::size_t element = 0;
    ElementType type;
    std::array<Table1Row, 5> rows;

    bool ok() const {
        for (const auto& row : rows)
            if (row.predicted != row.measured) return false;
        return true;
    }
};

/// Measures the width change at `element` for each of the five nonidentity
/// canonical words and compares with the prediction. Throws when the input
/// is not a vf-safe delta-matroid (the hypothesis of the prediction).
Table1Report verify_table1(const SetSystem& system, std::size_t element);

}  // namespace twuality
