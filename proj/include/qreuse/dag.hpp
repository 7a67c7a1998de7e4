#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qreuse/bool_matrix.hpp"
#include "qreuse/circuit.hpp"

namespace qreuse {

/// DAG representation of a circuit: one vertex per instruction (vertex id ==
/// instruction id), edges are execution-order constraints. Roots (indegree 0)
/// and terminals (outdegree 0) are listed in qubit order, so row/column i of
/// the derived biadjacency matrix always means qubit i.
struct CircuitDag {
    int vertex_count = 0;
    std::vector<std::vector<int>> successors;
    std::vector<std::vector<int>> predecessors;
    std::vector<int> roots;
    std::vector<int> terminals;

    bool has_edge(int from, int to) const;
    std::vector<std::pair<int, int>> edges() const;
};

/// Build the DAG of a static circuit, honoring commutable groups: members of
/// one group get no edges among themselves; each member connects from every
/// member of the previous group (or from the last untagged operation) on the
/// qubit, and symmetrically to the next operation after the block.
CircuitDag build_dag(const Circuit& circuit);

/// Biadjacency matrix of the simplified DAG: B[i][j] = 1 iff a directed path
/// runs from roots[i] to terminals[j]. Computed by graph search per root.
BoolMatrix simplified_dag(const CircuitDag& dag);

/// Biadjacency matrix computed directly by folding the per-gate column-OR
/// update over the instruction list; ignores group tags (imposed order).
/// Equals simplified_dag(build_dag(c)) for untagged circuits.
BoolMatrix matrix_biadjacency(const Circuit& circuit);

/// Dispatch: DAG route when group tags are present, column-OR fold otherwise.
BoolMatrix biadjacency(const Circuit& circuit);

/// Deterministic topological order (ties broken by smallest vertex id).
/// `extra_edges` are added on the fly; throws std::runtime_error on a cycle.
std::vector<int> topological_order(const CircuitDag& dag,
                                   std::span<const std::pair<int, int>> extra_edges = {});

struct DynamicEmission {
    Circuit circuit;
    /// k-th MEASURE of the emitted circuit realizes the measurement of this
    /// original qubit.
    std::vector<int> measure_sources;
    /// k-th RESET of the emitted circuit starts the lifetime of this original
    /// qubit.
    std::vector<int> reset_sources;
};

/// Convert a modified DAG back to a dynamic circuit: reorder instructions by
/// topological order, then for each added edge (terminal t, root r) relabel
/// every occurrence of r's register to t's register. Registers are compacted
/// to 0..n'-1 in first-use order and group tags are dropped. Edges are given
/// as (terminal vertex id, root vertex id) pairs; tails must be distinct
/// terminals and heads distinct roots, and the union must stay acyclic.
DynamicEmission emit_dynamic(const Circuit& circuit, const CircuitDag& dag,
                             std::span<const std::pair<int, int>> added_edges);

/// Graphviz export; added edges are styled dashed.
std::string to_dot(const CircuitDag& dag,
                   std::span<const std::pair<int, int>> added_edges = {});

}  // namespace qreuse
