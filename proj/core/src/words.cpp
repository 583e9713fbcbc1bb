#include "twuality/words.hpp"

#include "twuality/errors.hpp"

namespace twuality {
namespace {

// The per-element operators act faithfully on the three proper set systems
// over one element: state 0 = {empty}, 1 = {{e}}, 2 = {empty, {e}}. A twist
// swaps 0 and 1, a loop complementation swaps 0 and 2; together they realize
// all of S3, so a word is identified by the permutation it induces.
using Perm = std::array<unsigned char, 3>;

constexpr Perm kIdentityPerm{0, 1, 2};
constexpr Perm kStarPerm{1, 0, 2};
constexpr Perm kCrossPerm{2, 1, 0};

constexpr Perm compose_after(const Perm& later, const Perm& earlier) {
    return {later[earlier[0]], later[earlier[1]], later[earlier[2]]};
}

// Permutations of the six canonical words "", "*", "x", "*x", "x*", "*x*",
// with letters applied left to right.
constexpr std::array<Perm, 6> kCanonicalPerms{
    Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0},
    Perm{1, 2, 0}, Perm{2, 0, 1}, Perm{0, 2, 1},
};

constexpr const Perm& letter_perm(TwualLetter l) {
    return l == TwualLetter::star ? kStarPerm : kCrossPerm;
}
constexpr const Perm& letter_perm(RibbonLetter l) {
    return l == RibbonLetter::dual ? kStarPerm : kCrossPerm;
}

template <class Word>
Perm word_perm(const Word& word) {
    Perm p = kIdentityPerm;
    for (const auto letter : word.letters()) {
        p = compose_after(letter_perm(letter), p);
    }
    return p;
}

std::size_t perm_index(const Perm& p) {
    for (std::size_t i = 0; i < kCanonicalPerms.size(); ++i) {
        if (kCanonicalPerms[i] == p) return i;
    }
    return 0;  // unreachable: all six permutations are listed
}

constexpr std::array<const char*, 6> kCanonicalTwual{"", "*", "x", "*x", "x*", "*x*"};
constexpr std::array<const char*, 6> kCanonicalRibbon{"", "d", "t", "dt", "td", "dtd"};

}  // namespace

TwualWord TwualWord::parse(std::string_view ascii) {
    std::vector<TwualLetter> letters;
    letters.reserve(ascii.size());
    for (const char c : ascii) {
        switch (c) {
            case '*': letters.push_back(TwualLetter::star); break;
            case 'x': letters.push_back(TwualLetter::cross); break;
            default:
                throw error(std::string("invalid twuality word letter '") + c +
                            "': expected '*' or 'x'");
        }
    }
    return TwualWord(std::move(letters));
}

std::string TwualWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (const auto letter : letters_) {
        out.push_back(letter == TwualLetter::star ? '*' : 'x');
    }
    return out;
}

const std::array<TwualWord, 6>& TwualWord::canonical() {
    static const std::array<TwualWord, 6> words = [] {
        std::array<TwualWord, 6> w;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = TwualWord::parse(kCanonicalTwual[i]);
        return w;
    }();
    return words;
}

RWord RWord::parse(std::string_view ascii) {
    std::vector<RibbonLetter> letters;
    letters.reserve(ascii.size());
    for (const char c : ascii) {
        switch (c) {
            case 'd': letters.push_back(RibbonLetter::dual); break;
            case 't': letters.push_back(RibbonLetter::petrial); break;
            default:
                throw error(std::string("invalid ribbon word letter '") + c +
                            "': expected 'd' or 't'");
        }
    }
    return RWord(std::move(letters));
}

std::string RWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (const auto letter : letters_) {
        out.push_back(letter == RibbonLetter::dual ? 'd' : 't');
    }
    return out;
}

const std::array<RWord, 6>& RWord::canonical() {
    static const std::array<RWord, 6> words = [] {
        std::array<RWord, 6> w;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = RWord::parse(kCanonicalRibbon[i]);
        return w;
    }();
    return words;
}

std::size_t canonical_index(const TwualWord& word) { return perm_index(word_perm(word)); }
std::size_t canonical_index(const RWord& word) { return perm_index(word_perm(word)); }

TwualWord normalize_word(const TwualWord& word) {
    return TwualWord::canonical()[canonical_index(word)];
}

RWord normalize_word(const RWord& word) {
    return RWord::canonical()[canonical_index(word)];
}

TwualWord eta(const RWord& word) {
    std::vector<TwualLetter> letters;
    letters.reserve(word.letters().size());
    for (const auto letter : word.letters()) {
        letters.push_back(letter == RibbonLetter::dual ? TwualLetter::star
                                                       : TwualLetter::cross);
    }
    return TwualWord(std::move(letters));
}

}  // namespace twuality
