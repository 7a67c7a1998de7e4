#pragma once

#include <chrono>
#include <span>
#include <utility>
#include <vector>

#include "qreuse/bool_matrix.hpp"
#include "qreuse/circuit.hpp"
#include "qreuse/dag.hpp"

namespace qreuse {

/// Outcome of one compilation run.
struct CompilationResult {
    /// Chosen edges as (terminal qubit index, root qubit index) pairs.
    std::vector<std::pair<int, int>> added_edges;
    int alpha = 0;
    int original_width = 0;
    int compiled_width = 0;
    double reducibility_factor = 0.0;
    Circuit dynamic_circuit;
    /// k-th MEASURE of dynamic_circuit realizes the measurement of original
    /// qubit measure_sources[k].
    std::vector<int> measure_sources;
    std::vector<int> reset_sources;
    /// True when the result is a proven maximizer (exact solver within budget).
    bool proven_optimal = false;
    std::chrono::duration<double> elapsed{0.0};
};

/// Candidate-matrix update after committing edge (t, r): erase every pair
/// made illegal by the new reachability (terminals reachable from r cross
/// roots reaching t), then retire row t and column r.
void eliminate_candidates(BoolMatrix& cand, int t, int r);

/// Build the edge-selection matrix F from qubit-indexed edges.
BoolMatrix edge_selection(int n, std::span<const std::pair<int, int>> edges);

/// Re-check an edge selection against the biadjacency matrix: F below the
/// candidate matrix, row and column sums at most one, and the block matrix
/// [[O, B], [F, O]] nilpotent.
bool edges_satisfy_selection_constraints(const BoolMatrix& biadj,
                                         std::span<const std::pair<int, int>> edges);

/// Shared tail of every compiler: emit the dynamic circuit for the chosen
/// qubit-indexed edges and assemble the result record.
CompilationResult make_result(const Circuit& circuit, const CircuitDag& dag,
                              std::span<const std::pair<int, int>> edges,
                              bool proven_optimal,
                              std::chrono::duration<double> elapsed);

}  // namespace qreuse
