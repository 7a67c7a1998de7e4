#include "qreuse/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace qreuse {

namespace {

void require_normalized(const Circuit& circuit, const char* who) {
    if (!circuit.is_normalized_static()) {
        throw std::invalid_argument(std::string(who) +
                                    " expects a normalized static circuit");
    }
}

/// Core MRV loop over a candidate matrix; returns the chosen (row, col) pairs.
std::vector<std::pair<int, int>> mrv_edges(BoolMatrix cand) {
    int n = cand.size();
    std::vector<std::pair<int, int>> edges;
    for (;;) {
        int t = -1, t_count = n + 1;
        for (int row = 0; row < n; ++row) {
            int c = cand.row_count(row);
            if (c > 0 && c < t_count) {
                t = row;
                t_count = c;
            }
        }
        if (t < 0) break;
        int r = -1, r_count = n + 1;
        for (int col = 0; col < n; ++col) {
            if (!cand.get(t, col)) continue;
            int c = cand.col_count(col);
            if (c < r_count) {
                r = col;
                r_count = c;
            }
        }
        edges.emplace_back(t, r);
        eliminate_candidates(cand, t, r);
    }
    return edges;
}

std::vector<std::pair<int, int>> greedy_run(const BoolMatrix& initial, uint64_t seed) {
    BoolMatrix cand = initial;
    int n = cand.size();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> top;
    while (!cand.all_zero()) {
        int best_score = -1;
        top.clear();
        for (int t = 0; t < n; ++t) {
            for (int r = 0; r < n; ++r) {
                if (!cand.get(t, r)) continue;
                BoolMatrix trial = cand;
                eliminate_candidates(trial, t, r);
                int score = trial.count() + 1;
                if (score > best_score) {
                    best_score = score;
                    top.clear();
                }
                if (score == best_score) top.emplace_back(t, r);
            }
        }
        // Plain modulo keeps the draw bit-reproducible across standard
        // libraries; uniform_int_distribution is implementation-defined.
        auto [t, r] = top[rng() % top.size()];
        edges.emplace_back(t, r);
        eliminate_candidates(cand, t, r);
    }
    return edges;
}

/// Root->terminal reachability of the DAG extended by the given added edges
/// (as qubit-indexed pairs), by graph search per root.
BoolMatrix reachability_with_edges(const CircuitDag& dag,
                                   std::span<const std::pair<int, int>> edges) {
    int n = static_cast<int>(dag.roots.size());
    std::vector<std::vector<int>> extra(dag.vertex_count);
    for (auto [t, r] : edges) {
        extra[dag.terminals[t]].push_back(dag.roots[r]);
    }
    std::vector<int> terminal_index(dag.vertex_count, -1);
    for (int j = 0; j < n; ++j) terminal_index[dag.terminals[j]] = j;

    BoolMatrix b(n);
    std::vector<char> visited(dag.vertex_count);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        stack.assign(1, dag.roots[i]);
        visited[dag.roots[i]] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (terminal_index[v] >= 0) b.set(i, terminal_index[v], true);
            for (int w : dag.successors[v]) {
                if (!visited[w]) visited[w] = 1, stack.push_back(w);
            }
            for (int w : extra[v]) {
                if (!visited[w]) visited[w] = 1, stack.push_back(w);
            }
        }
    }
    return b;
}

}  // namespace

CompilationResult mrv_compile(const Circuit& circuit, const HeuristicConfig& config) {
    auto started = std::chrono::steady_clock::now();
    require_normalized(circuit, "mrv_compile");
    CircuitDag dag = build_dag(circuit);
    BoolMatrix cand = candidate_matrix(simplified_dag(dag));

    std::vector<std::pair<int, int>> edges = mrv_edges(cand);
    if (config.swap_roles) {
        std::vector<std::pair<int, int>> swapped = mrv_edges(cand.transposed());
        if (swapped.size() > edges.size()) {
            edges.clear();
            for (auto [r, t] : swapped) edges.emplace_back(t, r);
        }
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    return make_result(circuit, dag, edges, false, elapsed);
}

CompilationResult greedy_compile(const Circuit& circuit, const HeuristicConfig& config) {
    auto started = std::chrono::steady_clock::now();
    require_normalized(circuit, "greedy_compile");
    if (config.runs < 1) {
        throw std::invalid_argument("greedy_compile: runs must be at least 1");
    }
    CircuitDag dag = build_dag(circuit);
    BoolMatrix cand = candidate_matrix(simplified_dag(dag));

    std::vector<std::pair<int, int>> best;
    for (int run = 0; run < config.runs; ++run) {
        auto edges = greedy_run(cand, config.seed ^ static_cast<uint64_t>(run));
        if (edges.size() > best.size()) best = std::move(edges);
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    return make_result(circuit, dag, best, false, elapsed);
}

CompilationResult hybrid_compile(const Circuit& circuit, const HeuristicConfig& config) {
    auto started = std::chrono::steady_clock::now();
    require_normalized(circuit, "hybrid_compile");
    int n = circuit.width();
    int level = config.hierarchy_level;
    if (level < 0 || level > n) {
        throw std::invalid_argument("hybrid_compile: hierarchy level must be in [0, n]");
    }
    CircuitDag dag = build_dag(circuit);
    BoolMatrix cand = candidate_matrix(simplified_dag(dag));

    // The `level` terminals with the fewest (nonzero) candidates.
    std::vector<int> pool;
    for (int t = 0; t < n; ++t) {
        if (cand.row_count(t) > 0) pool.push_back(t);
    }
    std::stable_sort(pool.begin(), pool.end(), [&cand](int a, int b) {
        return cand.row_count(a) < cand.row_count(b);
    });
    if (static_cast<int>(pool.size()) > level) pool.resize(level);

    std::vector<std::vector<std::optional<int>>> choices;  // per pool terminal
    for (int t : pool) {
        std::vector<std::optional<int>> roots;
        for (int r = 0; r < n; ++r) {
            if (cand.get(t, r)) roots.emplace_back(r);
        }
        roots.emplace_back(std::nullopt);  // leave the terminal unmatched
        choices.push_back(std::move(roots));
    }

    std::vector<std::pair<int, int>> best = mrv_edges(cand);  // the empty assignment
    std::vector<size_t> odometer(choices.size(), 0);
    auto advance = [&]() {
        for (size_t i = 0; i < odometer.size(); ++i) {
            if (++odometer[i] < choices[i].size()) return true;
            odometer[i] = 0;
        }
        return false;
    };
    if (!choices.empty()) {
        do {
            std::vector<std::pair<int, int>> enumerated;
            std::vector<char> used_root(n, 0);
            bool feasible = true;
            for (size_t i = 0; i < odometer.size() && feasible; ++i) {
                const auto& pick = choices[i][odometer[i]];
                if (!pick) continue;
                if (used_root[*pick]) {
                    feasible = false;  // repeated root
                } else {
                    used_root[*pick] = 1;
                    enumerated.emplace_back(pool[i], *pick);
                }
            }
            if (!feasible || enumerated.empty()) continue;

            // Acyclicity of the modified DAG, then the residual candidate
            // matrix recomputed by graph search; matched rows/columns retire.
            BoolMatrix check = cand;
            for (auto [t, r] : enumerated) {
                if (!check.get(t, r)) {
                    feasible = false;
                    break;
                }
                eliminate_candidates(check, t, r);
            }
            if (!feasible) continue;
            BoolMatrix residual = candidate_matrix(reachability_with_edges(dag, enumerated));
            for (auto [t, r] : enumerated) {
                residual.clear_row(t);
                residual.clear_col(r);
            }
            auto edges = enumerated;
            for (auto [t, r] : mrv_edges(residual)) edges.emplace_back(t, r);
            if (edges.size() > best.size()) best = std::move(edges);
        } while (advance());
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    return make_result(circuit, dag, best, false, elapsed);
}

namespace {

std::vector<std::pair<int, int>> dckf_edges(const BoolMatrix& b, std::optional<int> first) {
    int n = b.size();
    std::vector<std::vector<int>> cones(n);
    for (int t = 0; t < n; ++t) {
        for (int r = 0; r < n; ++r) {
            if (b.get(r, t)) cones[t].push_back(r);
        }
    }
    std::vector<char> measured(n, 0), in_cone_union(n, 0), active(n, 0);
    std::vector<int> registers;                 // register -> occupant, -1 when free
    std::vector<std::vector<int>> occupation;   // register -> occupant history
    std::vector<int> location(n, -1);
    std::vector<std::pair<int, int>> edges;

    int union_size = 0;
    for (int step = 0; step < n; ++step) {
        int next = -1, best = n + 1;
        if (step == 0 && first) {
            next = *first;
        } else {
            for (int q = 0; q < n; ++q) {
                if (measured[q]) continue;
                int grow = 0;
                for (int r : cones[q]) grow += !in_cone_union[r];
                // Ties keep the last minimizer scanned.
                if (union_size + grow <= best) {
                    best = union_size + grow;
                    next = q;
                }
            }
        }
        for (int q : cones[next]) {
            if (measured[q] || active[q]) continue;
            int address = -1;
            for (int i = 0; i < static_cast<int>(registers.size()); ++i) {
                if (registers[i] < 0) {
                    address = i;
                    break;
                }
            }
            if (address >= 0) {
                edges.emplace_back(occupation[address].back(), q);
                occupation[address].push_back(q);
            } else {
                address = static_cast<int>(registers.size());
                registers.push_back(-1);
                occupation.push_back({q});
            }
            registers[address] = q;
            active[q] = 1;
            location[q] = address;
        }
        registers[location[next]] = -1;
        measured[next] = 1;
        for (int r : cones[next]) {
            if (!in_cone_union[r]) {
                in_cone_union[r] = 1;
                ++union_size;
            }
        }
    }
    return edges;
}

}  // namespace

CompilationResult dckf_compile(const Circuit& circuit) {
    auto started = std::chrono::steady_clock::now();
    require_normalized(circuit, "dckf_compile");
    // The baseline predates commutable handling: it always sees the imposed
    // gate order.
    Circuit plain = circuit.without_group_tags();
    CircuitDag dag = build_dag(plain);
    BoolMatrix b = simplified_dag(dag);
    auto edges = dckf_edges(b, std::nullopt);
    auto elapsed = std::chrono::steady_clock::now() - started;
    return make_result(plain, dag, edges, false, elapsed);
}

CompilationResult dckf_first_qubit_search(const Circuit& circuit) {
    auto started = std::chrono::steady_clock::now();
    require_normalized(circuit, "dckf_first_qubit_search");
    Circuit plain = circuit.without_group_tags();
    CircuitDag dag = build_dag(plain);
    BoolMatrix b = simplified_dag(dag);
    std::vector<std::pair<int, int>> best;
    for (int q = 0; q < circuit.width(); ++q) {
        auto edges = dckf_edges(b, q);
        if (edges.size() > best.size()) best = std::move(edges);
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    return make_result(plain, dag, best, false, elapsed);
}

}  // namespace qreuse
