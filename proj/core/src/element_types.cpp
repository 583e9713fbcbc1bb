#include "twuality/element_types.hpp"

#include "twuality/errors.hpp"

namespace twuality {
namespace {

// Width change w(D^{a|e}) - w(D) by element type, columns in canonical word
// order *, x, *x, x*, *x*. Rows indexed 3*primal + dual with letters p,u,t
// mapped to 0,1,2.
constexpr int kWidthDelta[9][5] = {
    /* pp */ {+2, +1, +2, +2, +1},
    /* pu */ {0, 0, +1, 0, +1},
    /* pt */ {+1, -1, 0, +1, +1},
    /* up */ {0, +1, 0, +1, 0},
    /* uu */ {-2, 0, -1, -1, 0},
    /* ut */ {-1, -1, -2, 0, 0},
    /* tp */ {+1, +1, +1, 0, -1},
    /* tu */ {-1, 0, 0, -2, -1},
    /* tt */ {0, -1, -1, -1, -1},
};

int letter_index(TypeLetter letter) {
    switch (letter) {
        case TypeLetter::p: return 0;
        case TypeLetter::u: return 1;
        default: return 2;
    }
}

}  // namespace

ElementType classify(const SetSystem& system, std::size_t element) {
    const WidthStats stats = width_stats(system);  // throws on improper input
    if (element >= system.ground_size()) {
        throw error("element index out of range");
    }
    bool in_min = false, in_min1 = false;
    bool off_max = false, off_max1 = false;
    for (const SubsetMask f : system.family()) {
        const int size = f.size();
        const bool has = f.test(element);
        if (size == stats.r_min && has) in_min = true;
        if (size == stats.r_min + 1 && has) in_min1 = true;
        if (size == stats.r_max && !has) off_max = true;
        if (size == stats.r_max - 1 && !has) off_max1 = true;
    }
    ElementType type;
    type.primal = in_min ? TypeLetter::p : (in_min1 ? TypeLetter::t : TypeLetter::u);
    type.dual = off_max ? TypeLetter::p : (off_max1 ? TypeLetter::t : TypeLetter::u);
    return type;
}

int predicted_delta(ElementType type, const TwualWord& word) {
    const std::size_t index = canonical_index(word);
    if (index == 0) {
        throw error("identity word has no width-change prediction");
    }
    return kWidthDelta[3 * letter_index(type.primal) + letter_index(type.dual)][index - 1];
}

Table1Report verify_table1(const SetSystem& system, std::size_t element) {
    if (!is_vf_safe(system)) {
        throw error("hypothesis violated: not a vf-safe delta-matroid");
    }
    Table1Report report;
    report.element = element;
    report.type = classify(system, element);
    const int base_width = width_stats(system).width;
    const auto& canonical = TwualWord::canonical();
    for (std::size_t w = 1; w < canonical.size(); ++w) {
        const SetSystem image = apply_word(system, canonical[w], SubsetMask::single(element));
        Table1Row row;
        row.word = canonical[w];
        row.predicted = predicted_delta(report.type, canonical[w]);
        row.measured = width_stats(image).width - base_width;
        report.rows[w - 1] = row;
    }
    return report;
}

}  // namespace twuality
