#pragma once

#include "qreuse/circuit.hpp"

namespace qreuse {

/// Reducibility via the DAG route: build the DAG, derive the simplified-DAG
/// biadjacency by graph search, reducible iff some entry is zero. Handles
/// commutable groups. O(m n^2).
bool is_reducible_dfs(const Circuit& circuit);

/// Reducibility via per-qubit reachable sets and one pass of the transitive
/// union rule. O(m n). Rejects circuits with group tags.
bool is_reducible_reachability(const Circuit& circuit);

/// Reducibility via the column-OR biadjacency fold: reducible iff the matrix
/// is not all ones. O(m n). Rejects circuits with group tags.
bool is_reducible_matrix(const Circuit& circuit);

}  // namespace qreuse
