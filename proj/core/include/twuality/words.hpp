#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace twuality {

/// Letters of the twuality alphabet acting on set systems:
/// star is a single-element twist, cross a single-element loop complementation.
enum class TwualLetter : unsigned char { star, cross };

/// Letters acting on ribbon graphs: dual (delta) and petrial (tau).
enum class RibbonLetter : unsigned char { dual, petrial };

/// A word over {*, x}, applied left to right, one element at a time.
/// The letters satisfy *^2 = x^2 = (*x)^3 = identity, so every word reduces
/// to one of six canonical forms: "", "*", "x", "*x", "x*", "*x*".
class TwualWord {
public:
    TwualWord() = default;
    explicit TwualWord(std::vector<TwualLetter> letters) : letters_(std::move(letters)) {}

    /// Parses the ASCII spelling: '*' for star, 'x' for cross.
    static TwualWord parse(std::string_view ascii);

    const std::vector<TwualLetter>& letters() const { return letters_; }
    bool is_identity_spelling() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    std::string str() const;

    /// The six canonical words, indexed as "", "*", "x", "*x", "x*", "*x*".
    static const std::array<TwualWord, 6>& canonical();

    friend bool operator==(const TwualWord&, const TwualWord&) = default;

private:
    std::vector<TwualLetter> letters_;
};

/// A word over {d, t} (dual, petrial) with the same group relations.
class RWord {
public:
    RWord() = default;
    explicit RWord(std::vector<RibbonLetter> letters) : letters_(std::move(letters)) {}

    /// Parses the ASCII spelling: 'd' for dual, 't' for petrial.
    static RWord parse(std::string_view ascii);

    const std::vector<RibbonLetter>& letters() const { return letters_; }
    std::string str() const;

    /// The six canonical words "", "d", "t", "dt", "td", "dtd".
    static const std::array<RWord, 6>& canonical();

    friend bool operator==(const RWord&, const RWord&) = default;

private:
    std::vector<RibbonLetter> letters_;
};

/// Index of the word's group element, 0..5, in the order of canonical().
std::size_t canonical_index(const TwualWord& word);
std::size_t canonical_index(const RWord& word);

/// Reduces a word to its canonical spelling via the S3 relations.
TwualWord normalize_word(const TwualWord& word);
RWord normalize_word(const RWord& word);

/// The group isomorphism between ribbon-graph and set-system operators:
/// dual |-> star, petrial |-> cross, applied letterwise.
TwualWord eta(const RWord& word);

}  // namespace twuality
