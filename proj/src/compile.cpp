#include "qreuse/compile.hpp"

#include <algorithm>
#include <stdexcept>

namespace qreuse {

void eliminate_candidates(BoolMatrix& cand, int t, int r) {
    int n = cand.size();
    // Zeros in row t are the roots already reaching t; zeros in column r are
    // the terminals already reachable from r. Every (u, v) in their product
    // becomes illegal: row_u &= row_t erases exactly those entries.
    for (int u = 0; u < n; ++u) {
        if (u != t && !cand.get(u, r)) cand.and_row(u, t);
    }
    cand.clear_row(t);
    cand.clear_col(r);
}

BoolMatrix edge_selection(int n, std::span<const std::pair<int, int>> edges) {
    BoolMatrix f(n);
    for (auto [t, r] : edges) f.set(t, r, true);
    return f;
}

bool edges_satisfy_selection_constraints(const BoolMatrix& biadj,
                                         std::span<const std::pair<int, int>> edges) {
    int n = biadj.size();
    BoolMatrix f = edge_selection(n, edges);
    if (static_cast<int>(edges.size()) != f.count()) return false;  // duplicate edge
    if (!f.submatrix_of(candidate_matrix(biadj))) return false;
    for (int i = 0; i < n; ++i) {
        if (f.row_count(i) > 1 || f.col_count(i) > 1) return false;
    }
    BoolMatrix block(2 * n);
    for (int r = 0; r < n; ++r) {
        for (int t = 0; t < n; ++t) {
            if (biadj.get(r, t)) block.set(r, n + t, true);
            if (f.get(t, r)) block.set(n + t, r, true);
        }
    }
    return is_nilpotent(block);
}

CompilationResult make_result(const Circuit& circuit, const CircuitDag& dag,
                              std::span<const std::pair<int, int>> edges,
                              bool proven_optimal,
                              std::chrono::duration<double> elapsed) {
    int n = circuit.width();
    std::vector<std::pair<int, int>> vertex_edges;
    vertex_edges.reserve(edges.size());
    for (auto [t, r] : edges) {
        if (t < 0 || t >= n || r < 0 || r >= n) {
            throw std::invalid_argument("make_result: qubit index out of range");
        }
        vertex_edges.emplace_back(dag.terminals[t], dag.roots[r]);
    }
    DynamicEmission emission = emit_dynamic(circuit, dag, vertex_edges);

    CompilationResult result;
    result.added_edges.assign(edges.begin(), edges.end());
    std::sort(result.added_edges.begin(), result.added_edges.end());
    result.alpha = static_cast<int>(edges.size());
    result.original_width = n;
    result.compiled_width = n - result.alpha;
    result.reducibility_factor =
        1.0 - static_cast<double>(result.compiled_width) / n;
    result.dynamic_circuit = std::move(emission.circuit);
    result.measure_sources = std::move(emission.measure_sources);
    result.reset_sources = std::move(emission.reset_sources);
    result.proven_optimal = proven_optimal;
    result.elapsed = elapsed;
    return result;
}

}  // namespace qreuse
