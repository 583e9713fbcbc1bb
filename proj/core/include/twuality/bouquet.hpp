#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "twuality/gf2.hpp"
#include "twuality/set_system.hpp"
#include "twuality/subset.hpp"
#include "twuality/width_polynomial.hpp"
#include "twuality/words.hpp"

namespace twuality {

/// A one-vertex ribbon graph encoded as a signed chord diagram: a cyclic
/// double-occurrence word (each chord label appears exactly twice) plus the
/// set of half-twisted chords. The starting rotation is part of the value;
/// rotations of the same diagram are distinct values with equal derived data.
class SignedChordDiagram {
public:
    /// `word` lists the 2m chord-end tokens in cyclic order; `twisted_labels`
    /// names the chords carrying a half-twist. Throws unless every label
    /// occurs exactly twice and every twisted label occurs in the word.
    SignedChordDiagram(std::vector<std::string> word, std::vector<std::string> twisted_labels);

    std::size_t chord_count() const { return labels_.size(); }
    /// Chord labels in order of first occurrence; index positions match the
    /// element order of the derived delta-matroid.
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& word() const { return word_; }
    /// Twisted chords as a mask over label indices.
    SubsetMask twisted() const { return twisted_; }

    /// The chord (label index) whose end sits at word position `position`.
    std::size_t label_at(std::size_t position) const { return label_of_position_[position]; }

    /// The two positions (ascending) of chord `label_index` in the word.
    std::pair<std::size_t, std::size_t> chord_ends(std::size_t label_index) const;

    friend bool operator==(const SignedChordDiagram&, const SignedChordDiagram&) = default;

private:
    std::vector<std::string> word_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> label_of_position_;
    SubsetMask twisted_;
};

/// Number of boundary components of the spanning ribbon subgraph on the
/// chords in `chords`: chords outside the subset are deleted, each remaining
/// end contributes a left and a right corner, corners are matched along the
/// vertex circle and across ribbon sides (straight for untwisted chords,
/// crossed for twisted ones), and the cycles of the two matchings are
/// counted. The empty subset yields the lone vertex circle: 1.
int boundary_components(const SignedChordDiagram& diagram, SubsetMask chords);

/// Euler genus of the whole bouquet, via 1 + m - boundary_components(all);
/// always equals the width of the derived delta-matroid.
int euler_genus(const SignedChordDiagram& diagram);

/// The ribbon-graphic delta-matroid: feasible sets are the chord subsets
/// whose spanning ribbon subgraph has exactly one boundary component
/// (spanning quasi-trees). Always normal. Cost is 2^m face tracings.
SetSystem delta_matroid(const SignedChordDiagram& diagram,
                        std::size_t max_chords = default_enumeration_cap);

/// Partial Petrial: toggles the half-twist on each chord of `chords`.
SignedChordDiagram petrial(const SignedChordDiagram& diagram, SubsetMask chords);

/// Partial-twuality polynomial of the bouquet, computed through the derived
/// delta-matroid: the word maps through eta and the polynomial enumerates
/// Euler genus = width over all 2^m subsets.
WidthPolynomial bouquet_twuality_polynomial(const SignedChordDiagram& diagram,
                                            const RWord& word, unsigned jobs = 1,
                                            std::size_t max_chords = default_enumeration_cap);

/// Chords as vertices; an edge where two chords interleave around the circle,
/// a loop on every twisted chord. Equals the intersection graph of the
/// derived delta-matroid.
LoopedSimpleGraph interleavement_graph(const SignedChordDiagram& diagram);

}  // namespace twuality
