#pragma once

#include <cstdint>

#include "qreuse/compile.hpp"

namespace qreuse {

struct HeuristicConfig {
    uint64_t seed = 0;
    /// Independent greedy runs; run k draws from a generator seeded seed ^ k.
    int runs = 1;
    /// MRV only: also run with root/terminal roles exchanged and keep the
    /// result with more added edges.
    bool swap_roles = false;
    /// Hybrid only: number of terminals enumerated exhaustively, 0..n.
    int hierarchy_level = 0;
};

/// Minimum-remaining-values heuristic: repeatedly connect the terminal with
/// the fewest surviving candidate roots to its candidate root with the
/// smallest column sum (ties toward smaller indices), updating the candidate
/// matrix after each pick.
CompilationResult mrv_compile(const Circuit& circuit, const HeuristicConfig& config = {});

/// Greedy heuristic: score every candidate edge by the number of candidates
/// surviving its simulated update plus one, then commit an edge drawn
/// uniformly (seeded) among the maximal scores. Best result over config.runs
/// independent runs.
CompilationResult greedy_compile(const Circuit& circuit, const HeuristicConfig& config = {});

/// Hybrid: exhaustively enumerate assignments (candidate roots or none) for
/// the hierarchy_level fewest-candidate terminals, keep the acyclic ones,
/// recompute the residual candidate matrix by graph search on the modified
/// DAG and finish with the MRV loop; return the assignment with the most
/// edges. Level 0 equals MRV, level n is exhaustive search.
CompilationResult hybrid_compile(const Circuit& circuit, const HeuristicConfig& config = {});

/// Reimplementation of the DCKF causal-cone baseline: repeatedly measure the
/// qubit minimizing the union of measured causal cones, activating cone
/// members into the lowest-index free register. Deterministic.
CompilationResult dckf_compile(const Circuit& circuit);

/// DCKF with first-qubit search: force each qubit as the first measurement,
/// run the baseline to completion, keep the best. Experimental.
CompilationResult dckf_first_qubit_search(const Circuit& circuit);

}  // namespace qreuse
