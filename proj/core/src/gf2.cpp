#include "twuality/gf2.hpp"

#include <array>

#include "twuality/errors.hpp"

namespace twuality {

Gf2SymMatrix::Gf2SymMatrix(std::size_t dimension) : rows_(dimension, 0) {
    if (dimension > max_ground_size) {
        throw error("matrix dimension exceeds " + std::to_string(max_ground_size));
    }
}

Gf2SymMatrix Gf2SymMatrix::from_rows(std::vector<std::uint64_t> rows) {
    Gf2SymMatrix m(rows.size());
    const std::uint64_t valid = SubsetMask::full(rows.size()).bits();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((rows[i] & ~valid) != 0) {
            throw error("matrix row uses columns outside the dimension");
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (((rows[i] >> j) & 1) != ((rows[j] >> i) & 1)) {
                throw error("matrix is not symmetric");
            }
        }
    }
    m.rows_ = std::move(rows);
    return m;
}

void Gf2SymMatrix::set_entry(std::size_t i, std::size_t j, bool value) {
    const std::uint64_t bi = std::uint64_t{1} << j;
    const std::uint64_t bj = std::uint64_t{1} << i;
    if (value) {
        rows_[i] |= bi;
        rows_[j] |= bj;
    } else {
        rows_[i] &= ~bi;
        rows_[j] &= ~bj;
    }
}

bool gf2_nonsingular(const Gf2SymMatrix& matrix, SubsetMask subset) {
    if (!subset.within(matrix.dimension())) {
        throw error("principal submatrix index outside the dimension");
    }
    if (subset.empty()) return true;  // C[empty] is non-singular by convention

    // Compact the selected rows/columns into the low bits, then eliminate
    // with word-wide XOR, always pivoting on the lowest remaining index.
    std::array<std::uint64_t, max_ground_size> rows{};
    std::size_t k = 0;
    for_each_element(subset, [&](std::size_t i) {
        std::uint64_t row = 0;
        std::size_t col = 0;
        for_each_element(subset, [&](std::size_t j) {
            row |= static_cast<std::uint64_t>(matrix.entry(i, j)) << col;
            ++col;
        });
        rows[k++] = row;
    });
    for (std::size_t col = 0; col < k; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = col;
        while (pivot < k && (rows[pivot] & bit) == 0) ++pivot;
        if (pivot == k) return false;
        std::swap(rows[col], rows[pivot]);
        for (std::size_t r = col + 1; r < k; ++r) {
            if (rows[r] & bit) rows[r] ^= rows[col];
        }
    }
    return true;
}

SetSystem from_matrix(const Gf2SymMatrix& matrix, std::vector<std::string> element_names,
                      std::size_t max_ground) {
    const std::size_t n = matrix.dimension();
    if (n > max_ground) {
        throw error("matrix dimension " + std::to_string(n) +
                    " exceeds the enumeration cap of " + std::to_string(max_ground));
    }
    if (!element_names.empty() && element_names.size() != n) {
        throw error("element name count does not match the matrix dimension");
    }
    std::vector<SubsetMask> family;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        if (gf2_nonsingular(matrix, SubsetMask(a))) family.push_back(SubsetMask(a));
    }
    if (element_names.empty()) {
        return SetSystem::over(n, std::move(family));
    }
    return SetSystem(std::move(element_names), std::move(family));
}

Gf2SymMatrix reconstruct_matrix(const SetSystem& system, std::size_t max_ground) {
    if (!system.normal()) {
        throw error("not normal: the empty set is not feasible");
    }
    const std::size_t n = system.ground_size();
    Gf2SymMatrix candidate(n);
    for (std::size_t e = 0; e < n; ++e) {
        candidate.set_entry(e, e, system.is_feasible(SubsetMask::single(e)));
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            // det C[{u,v}] = C_uu C_vv + C_uv over GF(2)
            const bool pair_feasible =
                system.is_feasible(SubsetMask::single(u) | SubsetMask::single(v));
            candidate.set_entry(u, v,
                                pair_feasible ^ (candidate.entry(u, u) && candidate.entry(v, v)));
        }
    }
    if (from_matrix(candidate, system.element_names(), max_ground) != system) {
        throw error("not binary: no symmetric GF(2) matrix realizes this set system");
    }
    return candidate;
}

LoopedSimpleGraph intersection_graph(const SetSystem& system, std::size_t max_ground) {
    return {system.element_names(), reconstruct_matrix(system, max_ground)};
}

SetSystem graph_to_dm(const LoopedSimpleGraph& graph, std::size_t max_ground) {
    return from_matrix(graph.adjacency, graph.vertex_names, max_ground);
}

}  // namespace twuality
