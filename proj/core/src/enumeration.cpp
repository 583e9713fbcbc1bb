#include "twuality/enumeration.hpp"

#include <algorithm>
#include <functional>

#include "small_family.hpp"
#include "twuality/element_types.hpp"
#include "twuality/errors.hpp"
#include "twuality/io.hpp"
#include "twuality/parallel.hpp"
#include "twuality/width_polynomial.hpp"

namespace twuality {
namespace {

constexpr int max_exhaustive_ground = 4;
constexpr int max_exhaustive_chords = 3;
constexpr int max_sampled_chords = 4;
// vf-safe verification per sampled instance costs 6^n; past this it stalls.
constexpr int max_vf_safe_sweep_ground = 6;
constexpr int max_matrix_sweep_ground = 12;

// Subsets of an n-set in canonical (size, value) order.
std::vector<SubsetMask> subsets_in_canonical_order(int n) {
    std::vector<SubsetMask> subsets;
    subsets.reserve(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) subsets.push_back(SubsetMask(s));
    std::sort(subsets.begin(), subsets.end(),
              [](SubsetMask a, SubsetMask b) { return canonical_less(a, b); });
    return subsets;
}

}  // namespace

std::vector<SetSystem> enumerate_proper_set_systems(int n) {
    if (n < 0 || n > max_exhaustive_ground) {
        throw error("exhaustive set-system enumeration supports 0 <= n <= " +
                    std::to_string(max_exhaustive_ground));
    }
    const std::vector<SubsetMask> order = subsets_in_canonical_order(n);
    const std::uint64_t family_count = std::uint64_t{1} << (std::uint64_t{1} << n);

    // Member lists come out sorted because `order` is; families are then
    // compared lexicographically as lists.
    std::vector<std::vector<SubsetMask>> families;
    families.reserve(family_count - 1);
    for (std::uint64_t chosen = 1; chosen < family_count; ++chosen) {
        std::vector<SubsetMask> family;
        for (std::size_t rank = 0; rank < order.size(); ++rank) {
            if ((chosen >> order[rank].bits()) & 1) family.push_back(order[rank]);
        }
        families.push_back(std::move(family));
    }
    std::sort(families.begin(), families.end(),
              [](const std::vector<SubsetMask>& a, const std::vector<SubsetMask>& b) {
                  return std::lexicographical_compare(
                      a.begin(), a.end(), b.begin(), b.end(),
                      [](SubsetMask x, SubsetMask y) { return canonical_less(x, y); });
              });

    std::vector<SetSystem> systems;
    systems.reserve(families.size());
    for (auto& family : families) {
        systems.push_back(SetSystem::over(static_cast<std::size_t>(n), std::move(family)));
    }
    return systems;
}

std::vector<SetSystem> enumerate_delta_matroids(int n) {
    std::vector<SetSystem> systems = enumerate_proper_set_systems(n);
    std::erase_if(systems, [](const SetSystem& d) { return !is_delta_matroid(d); });
    return systems;
}

bool loop_complement_oracle(const SetSystem& system, SubsetMask x, SubsetMask y) {
    const std::size_t n = system.ground_size();
    if (!x.within(n) || !y.within(n)) {
        throw error("oracle subset outside the ground set");
    }
    // |{feasible Z : Y - X <= Z <= Y}| odd <=> Y feasible in D^{x|X}
    const SubsetMask floor = y.minus(x);
    int count = 0;
    for (const SubsetMask z : system.family()) {
        if (y.contains(z) && z.contains(floor)) ++count;
    }
    return count % 2 == 1;
}

namespace {

const std::vector<std::string>& chord_label_pool() {
    static const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
    return pool;
}

// All double-occurrence words on m chords at a fixed starting rotation,
// labels assigned in first-occurrence order. Depth-first, closing the open
// chord with the smallest label before opening a fresh one, which yields the
// words in lexicographic order (aabb, abab, abba for m = 2).
void emit_words(std::size_t m, std::vector<std::size_t>& word, std::vector<std::size_t>& open,
                std::size_t next_fresh, const std::function<void(const std::vector<std::size_t>&)>& sink) {
    if (word.size() == 2 * m) {
        sink(word);
        return;
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
        const std::size_t chord = open[i];
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
        word.push_back(chord);
        emit_words(m, word, open, next_fresh, sink);
        word.pop_back();
        open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), chord);
    }
    if (next_fresh < m) {
        open.push_back(next_fresh);
        word.push_back(next_fresh);
        emit_words(m, word, open, next_fresh + 1, sink);
        word.pop_back();
        open.pop_back();
    }
}

SignedChordDiagram diagram_from_indices(const std::vector<std::size_t>& word_indices,
                                        SubsetMask twisted) {
    std::vector<std::string> word;
    word.reserve(word_indices.size());
    for (const std::size_t c : word_indices) word.push_back(chord_label_pool()[c]);
    std::vector<std::string> twisted_labels;
    for_each_element(twisted, [&](std::size_t c) {
        twisted_labels.push_back(chord_label_pool()[c]);
    });
    return SignedChordDiagram(std::move(word), std::move(twisted_labels));
}

}  // namespace

std::vector<SignedChordDiagram> enumerate_signed_chord_diagrams(int m) {
    if (m < 0 || m > max_exhaustive_chords) {
        throw error("exhaustive chord-diagram enumeration supports 0 <= m <= " +
                    std::to_string(max_exhaustive_chords) + "; larger sizes are sampled");
    }
    std::vector<SignedChordDiagram> diagrams;
    std::vector<std::size_t> word, open;
    emit_words(static_cast<std::size_t>(m), word, open, 0,
               [&](const std::vector<std::size_t>& w) {
                   for (std::uint64_t twist = 0; twist < (std::uint64_t{1} << m); ++twist) {
                       diagrams.push_back(diagram_from_indices(w, SubsetMask(twist)));
                   }
               });
    return diagrams;
}

std::vector<SignedChordDiagram> sample_signed_chord_diagrams(int m, int count,
                                                             std::uint64_t seed) {
    if (m < 1 || m > static_cast<int>(chord_label_pool().size())) {
        throw error("sampled chord count out of range");
    }
    Lcg64 rng(seed);
    std::vector<SignedChordDiagram> diagrams;
    diagrams.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // Fisher-Yates over the multiset {0,0,1,1,...}, then relabel by
        // first occurrence to restore the canonical label order.
        std::vector<std::size_t> word;
        for (int c = 0; c < m; ++c) {
            word.push_back(static_cast<std::size_t>(c));
            word.push_back(static_cast<std::size_t>(c));
        }
        for (std::size_t k = word.size(); k > 1; --k) {
            const std::size_t j = static_cast<std::size_t>(rng.next_below(k));
            std::swap(word[k - 1], word[j]);
        }
        std::vector<std::size_t> relabel(static_cast<std::size_t>(m), SIZE_MAX);
        std::size_t fresh = 0;
        for (auto& c : word) {
            if (relabel[c] == SIZE_MAX) relabel[c] = fresh++;
            c = relabel[c];
        }
        std::uint64_t twisted = 0;
        for (int c = 0; c < m; ++c) {
            twisted |= static_cast<std::uint64_t>(rng.next_bit()) << c;
        }
        diagrams.push_back(diagram_from_indices(word, SubsetMask(twisted)));
    }
    return diagrams;
}

Gf2SymMatrix sample_symmetric_matrix(std::size_t n, Lcg64& rng) {
    // Upper triangle in row-major order, diagonal included.
    Gf2SymMatrix matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            matrix.set_entry(i, j, rng.next_bit());
        }
    }
    return matrix;
}

SetSystem sample_vf_safe_delta_matroid(std::size_t n, Lcg64& rng) {
    SetSystem system = from_matrix(sample_symmetric_matrix(n, rng));
    for (std::size_t e = 0; e < n; ++e) {
        const auto& word = TwualWord::canonical()[rng.next_below(6)];
        system = apply_word(system, word, SubsetMask::single(e));
    }
    return system;
}

// ---------------------------------------------------------------------------
// counterexample search
// ---------------------------------------------------------------------------

namespace {

using SystemCheck = std::function<std::optional<std::string>(const SetSystem&)>;
using DiagramCheck = std::function<std::optional<std::string>(const SignedChordDiagram&)>;
using MatrixCheck = std::function<std::optional<std::string>(const Gf2SymMatrix&)>;

// Scans the instances in parallel chunks and keeps the hit with the smallest
// index, so the reported witness is the first in canonical order no matter
// how many jobs run.
template <class Item, class PerItem>
std::optional<Witness> first_witness(const std::vector<Item>& items, unsigned jobs,
                                     const PerItem& witness_for) {
    using Hit = std::optional<std::pair<std::uint64_t, Witness>>;
    Hit hit = chunked_reduce(
        items.size(), jobs, Hit{},
        [&](std::uint64_t lo, std::uint64_t hi) -> Hit {
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (auto w = witness_for(items[i])) {
                    return std::make_pair(i, std::move(*w));
                }
            }
            return std::nullopt;
        },
        [](Hit acc, Hit part) {
            if (!acc || (part && part->first < acc->first)) return part;
            return acc;
        });
    if (!hit) return std::nullopt;
    return std::move(hit->second);
}

std::optional<Witness> sweep_vf_safe(const std::string& property,
                                     const EnumerationBudget& budget,
                                     const SystemCheck& check) {
    if (budget.max_ground_size > max_vf_safe_sweep_ground) {
        throw error("vf-safe sweeps support ground sizes up to " +
                    std::to_string(max_vf_safe_sweep_ground) +
                    " (verification costs 6^n per instance)");
    }
    for (int n = 1; n <= budget.max_ground_size; ++n) {
        std::vector<SetSystem> instances;
        bool verify_sampled_class = false;
        if (n <= max_exhaustive_ground) {
            instances = enumerate_proper_set_systems(n);
        } else {
            Lcg64 rng(budget.seed);
            instances.reserve(static_cast<std::size_t>(budget.sample_count));
            for (int i = 0; i < budget.sample_count; ++i) {
                instances.push_back(sample_vf_safe_delta_matroid(static_cast<std::size_t>(n), rng));
            }
            verify_sampled_class = true;
        }
        auto witness = first_witness(
            instances, budget.jobs,
            [&](const SetSystem& d) -> std::optional<Witness> {
                if (verify_sampled_class) {
                    if (!is_vf_safe(d)) {
                        return Witness{property, "sampled system is not vf-safe", to_ss_format(d)};
                    }
                } else if (!is_delta_matroid(d) || !is_vf_safe(d)) {
                    return std::nullopt;  // outside the property's domain
                }
                if (auto message = check(d)) {
                    return Witness{property, *message, to_ss_format(d)};
                }
                return std::nullopt;
            });
        if (witness) return witness;
    }
    return std::nullopt;
}

std::optional<Witness> sweep_diagrams(const std::string& property,
                                      const EnumerationBudget& budget,
                                      const DiagramCheck& check) {
    if (budget.max_chords > max_sampled_chords) {
        throw error("chord budget exceeds " + std::to_string(max_sampled_chords));
    }
    for (int m = 1; m <= budget.max_chords; ++m) {
        const std::vector<SignedChordDiagram> diagrams =
            m <= max_exhaustive_chords
                ? enumerate_signed_chord_diagrams(m)
                : sample_signed_chord_diagrams(m, budget.sample_count, budget.seed);
        auto witness = first_witness(
            diagrams, budget.jobs,
            [&](const SignedChordDiagram& b) -> std::optional<Witness> {
                if (auto message = check(b)) {
                    return Witness{property, *message, to_cd_format(b)};
                }
                return std::nullopt;
            });
        if (witness) return witness;
    }
    return std::nullopt;
}

std::optional<Witness> sweep_matrices(const std::string& property,
                                      const EnumerationBudget& budget,
                                      const MatrixCheck& check) {
    if (budget.max_ground_size > max_matrix_sweep_ground) {
        throw error("matrix sweeps support dimensions up to " +
                    std::to_string(max_matrix_sweep_ground));
    }
    for (int n = 1; n <= budget.max_ground_size; ++n) {
        std::vector<Gf2SymMatrix> matrices;
        if (n <= max_exhaustive_ground) {
            const int bits = n * (n + 1) / 2;
            matrices.reserve(std::size_t{1} << bits);
            for (std::uint64_t u = 0; u < (std::uint64_t{1} << bits); ++u) {
                Gf2SymMatrix matrix(static_cast<std::size_t>(n));
                int k = 0;
                for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                    for (std::size_t j = i; j < static_cast<std::size_t>(n); ++j) {
                        matrix.set_entry(i, j, (u >> k++) & 1);
                    }
                }
                matrices.push_back(std::move(matrix));
            }
        } else {
            Lcg64 rng(budget.seed);
            matrices.reserve(static_cast<std::size_t>(budget.sample_count));
            for (int i = 0; i < budget.sample_count; ++i) {
                matrices.push_back(sample_symmetric_matrix(static_cast<std::size_t>(n), rng));
            }
        }
        auto witness = first_witness(
            matrices, budget.jobs,
            [&](const Gf2SymMatrix& matrix) -> std::optional<Witness> {
                if (auto message = check(matrix)) {
                    return Witness{property, *message, to_gf2_format(matrix)};
                }
                return std::nullopt;
            });
        if (witness) return witness;
    }
    return std::nullopt;
}

std::optional<std::string> check_word_gap(const SetSystem& d, std::size_t word_index,
                                          bool require_interpolating) {
    const auto& word = TwualWord::canonical()[word_index];
    const GapProfile profile = gap_profile(twuality_polynomial(d, word));
    if (require_interpolating ? !profile.is_interpolating : profile.max_gap > 1) {
        return "the " + (word.str().empty() ? std::string("identity") : word.str()) +
               "-polynomial " +
               twuality_polynomial(d, word).str() +
               (require_interpolating ? " is not interpolating" : " has a gap of size 2 or more");
    }
    return std::nullopt;
}

std::optional<std::string> check_table1(const SetSystem& d) {
    const int base = width_stats(d).width;
    for (std::size_t e = 0; e < d.ground_size(); ++e) {
        const ElementType type = classify(d, e);
        for (std::size_t w = 1; w < 6; ++w) {
            const auto& word = TwualWord::canonical()[w];
            const int measured =
                width_stats(apply_word(d, word, SubsetMask::single(e))).width - base;
            if (measured != predicted_delta(type, word)) {
                return "element " + d.element_names()[e] + " of type " + type.str() +
                       " under " + word.str() + ": measured " + std::to_string(measured) +
                       ", predicted " + std::to_string(predicted_delta(type, word));
            }
        }
    }
    return std::nullopt;
}

bool components_are_odd_complete_or_looped_vertex(const Gf2SymMatrix& c) {
    const std::size_t n = c.dimension();
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> component{s};
        seen[s] = true;
        for (std::size_t k = 0; k < component.size(); ++k) {
            const std::size_t v = component[k];
            for (std::size_t w = 0; w < n; ++w) {
                if (w != v && c.entry(v, w) && !seen[w]) {
                    seen[w] = true;
                    component.push_back(w);
                }
            }
        }
        if (component.size() == 1) continue;  // K1 or a single looped vertex
        if (component.size() % 2 == 0) return false;
        for (const std::size_t v : component) {
            if (c.entry(v, v)) return false;
            for (const std::size_t w : component) {
                if (v != w && !c.entry(v, w)) return false;
            }
        }
    }
    return true;
}

struct Property {
    std::string id;
    std::function<std::optional<Witness>(const EnumerationBudget&)> search;
};

const std::vector<Property>& property_registry() {
    static const std::vector<Property> registry = [] {
        std::vector<Property> props;
        const auto vf_safe_prop = [&props](const std::string& id, SystemCheck check) {
            props.push_back({id, [id, check](const EnumerationBudget& b) {
                                 return sweep_vf_safe(id, b, check);
                             }});
        };
        const auto diagram_prop = [&props](const std::string& id, DiagramCheck check) {
            props.push_back({id, [id, check](const EnumerationBudget& b) {
                                 return sweep_diagrams(id, b, check);
                             }});
        };

        vf_safe_prop("table1", check_table1);
        vf_safe_prop("gap-le-1", [](const SetSystem& d) -> std::optional<std::string> {
            for (std::size_t w = 0; w < 6; ++w) {
                if (auto msg = check_word_gap(d, w, false)) return msg;
            }
            return std::nullopt;
        });
        vf_safe_prop("interpolating-x",
                     [](const SetSystem& d) { return check_word_gap(d, 2, true); });
        vf_safe_prop("interpolating-sxs",
                     [](const SetSystem& d) { return check_word_gap(d, 5, true); });
        vf_safe_prop("interpolating-star",
                     [](const SetSystem& d) { return check_word_gap(d, 1, true); });
        vf_safe_prop("log-concavity", [](const SetSystem& d) -> std::optional<std::string> {
            for (std::size_t w = 0; w < 6; ++w) {
                const auto& word = TwualWord::canonical()[w];
                const WidthPolynomial p = twuality_polynomial(d, word);
                if (!log_concavity(p)) {
                    return "the " + (word.str().empty() ? std::string("identity") : word.str()) +
                           "-polynomial " + p.str() + " is not log-concave";
                }
            }
            return std::nullopt;
        });
        vf_safe_prop("monomial-x", [](const SetSystem& d) -> std::optional<std::string> {
            if (!monomial_check(d, TwualWord::parse("x")).characterization_holds) {
                return "x-monomial characterization fails";
            }
            return std::nullopt;
        });
        vf_safe_prop("monomial-sxs", [](const SetSystem& d) -> std::optional<std::string> {
            if (!monomial_check(d, TwualWord::parse("*x*")).characterization_holds) {
                return "*x*-monomial characterization fails";
            }
            return std::nullopt;
        });

        diagram_prop("bouquet-genus", [](const SignedChordDiagram& b) -> std::optional<std::string> {
            const int genus = euler_genus(b);
            const int dm_width = width_stats(delta_matroid(b)).width;
            if (genus != dm_width) {
                return "Euler genus " + std::to_string(genus) + " != delta-matroid width " +
                       std::to_string(dm_width);
            }
            return std::nullopt;
        });
        diagram_prop("bouquet-petrial", [](const SignedChordDiagram& b) -> std::optional<std::string> {
            const SetSystem d = delta_matroid(b);
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << b.chord_count()); ++a) {
                const SubsetMask subset(a);
                if (delta_matroid(petrial(b, subset)) != loop_complement(d, subset)) {
                    return "partial Petrial and loop complementation disagree on subset index " +
                           std::to_string(a);
                }
            }
            return std::nullopt;
        });
        diagram_prop("bouquet-interleavement",
                     [](const SignedChordDiagram& b) -> std::optional<std::string> {
                         if (interleavement_graph(b) != intersection_graph(delta_matroid(b))) {
                             return "interleavement graph differs from the intersection graph";
                         }
                         return std::nullopt;
                     });

        props.push_back({"star-monomial-binary", [](const EnumerationBudget& b) {
                             return sweep_matrices(
                                 "star-monomial-binary", b,
                                 [](const Gf2SymMatrix& c) -> std::optional<std::string> {
                                     const WidthPolynomial p = twuality_polynomial(
                                         from_matrix(c), TwualWord::parse("*"));
                                     std::size_t terms = 0;
                                     for (const auto coeff : p.coefficients()) {
                                         if (coeff != 0) ++terms;
                                     }
                                     const bool is_monomial = terms == 1;
                                     if (is_monomial !=
                                         components_are_odd_complete_or_looped_vertex(c)) {
                                         return "*-monomial graph characterization fails: " +
                                                p.str();
                                     }
                                     return std::nullopt;
                                 });
                         }});
        return props;
    }();
    return registry;
}

}  // namespace

std::optional<Witness> counterexample_search(std::string_view property_id,
                                             const EnumerationBudget& budget) {
    for (const Property& property : property_registry()) {
        if (property.id == property_id) return property.search(budget);
    }
    std::string known;
    for (const auto& id : registered_properties()) {
        if (!known.empty()) known += ", ";
        known += id;
    }
    throw error("unknown property '" + std::string(property_id) + "'; known properties: " + known);
}

const std::vector<std::string>& registered_properties() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const Property& property : property_registry()) out.push_back(property.id);
        return out;
    }();
    return ids;
}

}  // namespace twuality
