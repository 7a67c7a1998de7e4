#include "qreuse/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qreuse {

namespace {

struct SearchState {
    int n = 0;
    std::vector<int> order;  // terminals by ascending initial candidate count
    std::vector<std::pair<int, int>> current, best;
    long long nodes_left = 0;
    bool exhausted = false;

    void dfs(const BoolMatrix& cand, size_t depth) {
        if (depth == order.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        // Admissible bound: each remaining terminal with surviving candidates
        // contributes at most one edge.
        int possible = 0;
        for (size_t i = depth; i < order.size(); ++i) {
            if (cand.row_count(order[i]) > 0) ++possible;
        }
        if (current.size() + possible <= best.size()) return;

        int t = order[depth];
        for (int r = 0; r < n; ++r) {
            if (!cand.get(t, r)) continue;
            if (nodes_left-- <= 0) {
                exhausted = true;
                return;
            }
            BoolMatrix child = cand;
            eliminate_candidates(child, t, r);
            current.emplace_back(t, r);
            dfs(child, depth + 1);
            current.pop_back();
            if (exhausted) return;
        }
        dfs(cand, depth + 1);  // leave t unmatched
    }
};

}  // namespace

CompilationResult optimal_compile(const Circuit& circuit, const ExactOptions& options) {
    auto started = std::chrono::steady_clock::now();
    if (!circuit.is_normalized_static()) {
        throw std::invalid_argument("optimal_compile expects a normalized static circuit");
    }
    CircuitDag dag = build_dag(circuit);
    BoolMatrix b = simplified_dag(dag);

    SearchState state;
    state.n = circuit.width();
    state.nodes_left = options.node_budget;
    BoolMatrix cand = candidate_matrix(b);
    state.order.resize(state.n);
    std::iota(state.order.begin(), state.order.end(), 0);
    std::stable_sort(state.order.begin(), state.order.end(),
                     [&cand](int a, int b2) { return cand.row_count(a) < cand.row_count(b2); });
    state.dfs(cand, 0);

    auto elapsed = std::chrono::steady_clock::now() - started;
    return make_result(circuit, dag, state.best, !state.exhausted, elapsed);
}

int brute_force_width(const Circuit& circuit) {
    if (!circuit.is_normalized_static()) {
        throw std::invalid_argument("brute_force_width expects a normalized static circuit");
    }
    int n = circuit.width();
    if (n > 8) {
        throw std::invalid_argument("brute_force_width is limited to n <= 8");
    }
    BoolMatrix b = simplified_dag(build_dag(circuit));
    BoolMatrix cand = candidate_matrix(b);

    auto acyclic = [&b, n](const BoolMatrix& f) {
        BoolMatrix block(2 * n);
        for (int r = 0; r < n; ++r) {
            for (int t = 0; t < n; ++t) {
                if (b.get(r, t)) block.set(r, n + t, true);
                if (f.get(t, r)) block.set(n + t, r, true);
            }
        }
        return is_nilpotent(block);
    };

    int best = 0;
    BoolMatrix f(n);
    std::vector<char> col_used(n, 0);
    auto rec = [&](auto&& self, int t, int count) -> void {
        if (t == n) {
            best = std::max(best, count);
            return;
        }
        if (count + (n - t) <= best) return;
        self(self, t + 1, count);  // t unmatched
        for (int r = 0; r < n; ++r) {
            if (!cand.get(t, r) || col_used[r]) continue;
            f.set(t, r, true);
            col_used[r] = 1;
            if (acyclic(f)) self(self, t + 1, count + 1);
            f.set(t, r, false);
            col_used[r] = 0;
        }
    };
    rec(rec, 0, 0);
    return n - best;
}

}  // namespace qreuse
