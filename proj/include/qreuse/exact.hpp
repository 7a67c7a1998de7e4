#pragma once

#include <optional>

#include "qreuse/compile.hpp"

namespace qreuse {

struct ExactOptions {
    /// Search nodes before giving up on proving optimality.
    long long node_budget = 10'000'000;
};

/// Optimal compilation: maximize the number of added edges subject to the
/// candidate, matching and acyclicity constraints, via depth-first search with
/// MRV-style variable ordering and incremental candidate elimination. Returns
/// the best selection found; proven_optimal is false when the node budget ran
/// out first.
CompilationResult optimal_compile(const Circuit& circuit, const ExactOptions& options = {});

/// Independent oracle: enumerate every partial matching inside the candidate
/// matrix, filter by fresh block-matrix nilpotency checks, return n - max|F|.
/// Only for n <= 8.
int brute_force_width(const Circuit& circuit);

}  // namespace qreuse
