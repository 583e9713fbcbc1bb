#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twuality/set_system.hpp"
#include "twuality/subset.hpp"

namespace twuality {

/// Symmetric matrix over GF(2), rows stored as bit vectors. Symmetry is an
/// invariant: construction validates it and mutation keeps it.
class Gf2SymMatrix {
public:
    explicit Gf2SymMatrix(std::size_t dimension);

    /// Validates symmetry and the dimension bound; throws otherwise.
    static Gf2SymMatrix from_rows(std::vector<std::uint64_t> rows);

    std::size_t dimension() const { return rows_.size(); }
    bool entry(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1; }
    std::uint64_t row_bits(std::size_t i) const { return rows_[i]; }

    /// Sets both (i, j) and (j, i).
    void set_entry(std::size_t i, std::size_t j, bool value);

    friend bool operator==(const Gf2SymMatrix&, const Gf2SymMatrix&) = default;

private:
    std::vector<std::uint64_t> rows_;
};

/// A simple graph with at most one loop per vertex; the adjacency matrix is
/// symmetric over GF(2) with diagonal bits marking loops.
struct LoopedSimpleGraph {
    std::vector<std::string> vertex_names;
    Gf2SymMatrix adjacency;

    std::size_t vertex_count() const { return vertex_names.size(); }
    bool has_loop(std::size_t v) const { return adjacency.entry(v, v); }
    bool has_edge(std::size_t u, std::size_t v) const { return u != v && adjacency.entry(u, v); }

    friend bool operator==(const LoopedSimpleGraph&, const LoopedSimpleGraph&) = default;
};

/// Whether the principal submatrix indexed by A is non-singular over GF(2),
/// by bit-level Gaussian elimination (lowest-index pivot first). The empty
/// submatrix is non-singular by convention.
bool gf2_nonsingular(const Gf2SymMatrix& matrix, SubsetMask subset);

/// The delta-matroid D(C): feasible sets are exactly the index sets of
/// non-singular principal submatrices. The result is normal. Elements are
/// named "1".."n" unless names are supplied.
SetSystem from_matrix(const Gf2SymMatrix& matrix,
                      std::vector<std::string> element_names = {},
                      std::size_t max_ground = default_enumeration_cap);

/// Recovers the unique matrix C with D = D(C) for a normal binary
/// delta-matroid: the diagonal comes from singleton feasibility, off-diagonal
/// entries from pair feasibility, and the candidate is verified globally.
/// Throws "not normal" / "not binary" when no such C exists.
Gf2SymMatrix reconstruct_matrix(const SetSystem& system,
                                std::size_t max_ground = default_enumeration_cap);

/// The looped simple graph whose adjacency matrix is reconstruct_matrix(D).
LoopedSimpleGraph intersection_graph(const SetSystem& system,
                                     std::size_t max_ground = default_enumeration_cap);

/// from_matrix applied to the adjacency matrix; left inverse of
/// intersection_graph.
SetSystem graph_to_dm(const LoopedSimpleGraph& graph,
                      std::size_t max_ground = default_enumeration_cap);

}  // namespace twuality
