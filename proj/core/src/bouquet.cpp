#include "twuality/bouquet.hpp"

#include <algorithm>
#include <map>

#include "twuality/errors.hpp"

namespace twuality {

SignedChordDiagram::SignedChordDiagram(std::vector<std::string> word,
                                       std::vector<std::string> twisted_labels)
    : word_(std::move(word)) {
    if (word_.size() % 2 != 0) {
        throw error("chord word has odd length");
    }
    std::map<std::string, int> occurrences;
    for (const auto& token : word_) {
        if (token.empty()) throw error("empty chord label");
        auto [it, inserted] = occurrences.try_emplace(token, 0);
        if (inserted) labels_.push_back(token);
        if (++it->second > 2) {
            throw error("chord label '" + token + "' occurs more than twice");
        }
    }
    for (const auto& [label, count] : occurrences) {
        if (count != 2) {
            throw error("chord label '" + label + "' occurs only once");
        }
    }
    if (labels_.size() > max_ground_size) {
        throw error("more than " + std::to_string(max_ground_size) + " chords");
    }
    label_of_position_.reserve(word_.size());
    for (const auto& token : word_) {
        const auto it = std::find(labels_.begin(), labels_.end(), token);
        label_of_position_.push_back(static_cast<std::size_t>(it - labels_.begin()));
    }
    for (const auto& label : twisted_labels) {
        const auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) {
            throw error("twisted label '" + label + "' does not name a chord");
        }
        twisted_ = twisted_ | SubsetMask::single(static_cast<std::size_t>(it - labels_.begin()));
    }
}

std::pair<std::size_t, std::size_t> SignedChordDiagram::chord_ends(std::size_t label_index) const {
    std::size_t first = word_.size(), second = word_.size();
    for (std::size_t p = 0; p < word_.size(); ++p) {
        if (label_of_position_[p] == label_index) {
            if (first == word_.size()) {
                first = p;
            } else {
                second = p;
            }
        }
    }
    return {first, second};
}

int boundary_components(const SignedChordDiagram& diagram, SubsetMask chords) {
    if (!chords.within(diagram.chord_count())) {
        throw error("chord subset outside the diagram");
    }
    // Keep only the ends of selected chords, in cyclic order.
    std::vector<std::size_t> kept;  // chord label index per surviving position
    for (std::size_t p = 0; p < diagram.word().size(); ++p) {
        const std::size_t label = diagram.label_at(p);
        if (chords.test(label)) kept.push_back(label);
    }
    const std::size_t k = kept.size();
    if (k == 0) return 1;  // the bare vertex disc has one boundary circle

    // Corner 2p = left of position p, corner 2p + 1 = right of position p.
    const auto left = [](std::size_t p) { return 2 * p; };
    const auto right = [](std::size_t p) { return 2 * p + 1; };
    std::vector<std::size_t> arc(2 * k), side(2 * k);
    for (std::size_t p = 0; p < k; ++p) {
        const std::size_t q = (p + 1) % k;
        arc[right(p)] = left(q);
        arc[left(q)] = right(p);
    }
    std::vector<std::vector<std::size_t>> ends(diagram.chord_count());
    for (std::size_t p = 0; p < k; ++p) ends[kept[p]].push_back(p);
    for_each_element(chords, [&](std::size_t c) {
        const std::size_t x = ends[c][0];
        const std::size_t y = ends[c][1];
        if (diagram.twisted().test(c)) {
            side[left(x)] = left(y);
            side[left(y)] = left(x);
            side[right(x)] = right(y);
            side[right(y)] = right(x);
        } else {
            side[left(x)] = right(y);
            side[right(y)] = left(x);
            side[right(x)] = left(y);
            side[left(y)] = right(x);
        }
    });

    // Cycles of the union of the two perfect matchings: each corner has one
    // arc partner and one side partner, so alternating walks close up.
    std::vector<bool> seen(2 * k, false);
    int cycles = 0;
    for (std::size_t start = 0; start < 2 * k; ++start) {
        if (seen[start]) continue;
        ++cycles;
        std::size_t corner = start;
        do {
            seen[corner] = true;
            const std::size_t via = arc[corner];
            seen[via] = true;
            corner = side[via];
        } while (corner != start);
    }
    return cycles;
}

int euler_genus(const SignedChordDiagram& diagram) {
    const int m = static_cast<int>(diagram.chord_count());
    return 1 + m - boundary_components(diagram, SubsetMask::full(diagram.chord_count()));
}

SetSystem delta_matroid(const SignedChordDiagram& diagram, std::size_t max_chords) {
    const std::size_t m = diagram.chord_count();
    if (m > max_chords) {
        throw error("diagram with " + std::to_string(m) +
                    " chords exceeds the enumeration cap of " + std::to_string(max_chords));
    }
    std::vector<SubsetMask> family;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
        if (boundary_components(diagram, SubsetMask(a)) == 1) {
            family.push_back(SubsetMask(a));
        }
    }
    return SetSystem(diagram.labels(), std::move(family));
}

SignedChordDiagram petrial(const SignedChordDiagram& diagram, SubsetMask chords) {
    if (!chords.within(diagram.chord_count())) {
        throw error("chord subset outside the diagram");
    }
    const SubsetMask twisted = diagram.twisted() ^ chords;
    std::vector<std::string> twisted_labels;
    for_each_element(twisted, [&](std::size_t c) {
        twisted_labels.push_back(diagram.labels()[c]);
    });
    return SignedChordDiagram(diagram.word(), std::move(twisted_labels));
}

WidthPolynomial bouquet_twuality_polynomial(const SignedChordDiagram& diagram,
                                            const RWord& word, unsigned jobs,
                                            std::size_t max_chords) {
    return twuality_polynomial(delta_matroid(diagram, max_chords), eta(word), jobs, max_chords);
}

LoopedSimpleGraph interleavement_graph(const SignedChordDiagram& diagram) {
    const std::size_t m = diagram.chord_count();
    Gf2SymMatrix adjacency(m);
    for (std::size_t c = 0; c < m; ++c) {
        adjacency.set_entry(c, c, diagram.twisted().test(c));
    }
    for (std::size_t c = 0; c < m; ++c) {
        const auto [c1, c2] = diagram.chord_ends(c);
        for (std::size_t d = c + 1; d < m; ++d) {
            const auto [d1, d2] = diagram.chord_ends(d);
            // interleaved <=> exactly one end of d lies between the ends of c
            const bool inside1 = c1 < d1 && d1 < c2;
            const bool inside2 = c1 < d2 && d2 < c2;
            adjacency.set_entry(c, d, inside1 != inside2);
        }
    }
    return {diagram.labels(), adjacency};
}

}  // namespace twuality
