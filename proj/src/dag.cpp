#include "qreuse/dag.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace qreuse {

bool CircuitDag::has_edge(int from, int to) const {
    const auto& succ = successors[from];
    return std::find(succ.begin(), succ.end(), to) != succ.end();
}

std::vector<std::pair<int, int>> CircuitDag::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count; ++u) {
        for (int v : successors[u]) out.emplace_back(u, v);
    }
    return out;
}

CircuitDag build_dag(const Circuit& circuit) {
    CircuitDag dag;
    dag.vertex_count = circuit.size();
    dag.successors.resize(dag.vertex_count);
    dag.predecessors.resize(dag.vertex_count);

    auto add_edge = [&dag](int u, int v) {
        if (!dag.has_edge(u, v)) {
            dag.successors[u].push_back(v);
            dag.predecessors[v].push_back(u);
        }
    };

    std::vector<std::vector<int>> causal(circuit.width());
    for (const auto& ins : circuit.instructions()) {
        for (int q : ins.qubits) {
            auto& list = causal[q];
            if (!list.empty()) {
                int prev = list.back();
                std::optional<int> prev_group = circuit[prev].group;
                if (!prev_group.has_value()) {
                    add_edge(prev, ins.id);
                } else if (ins.group == prev_group) {
                    // Same commutable block: skip its members and connect to
                    // the previous block boundary on this qubit instead.
                    for (auto it = list.rbegin(); it != list.rend(); ++it) {
                        std::optional<int> g = circuit[*it].group;
                        if (g == ins.group) continue;
                        if (!g.has_value()) {
                            add_edge(*it, ins.id);
                        } else {
                            for (int v : list) {
                                if (circuit[v].group == g) add_edge(v, ins.id);
                            }
                        }
                        break;
                    }
                } else {
                    for (int v : list) {
                        if (circuit[v].group == prev_group) add_edge(v, ins.id);
                    }
                }
            }
            list.push_back(ins.id);
        }
    }

    std::vector<std::pair<int, int>> roots, terminals;  // (qubit, vertex)
    for (int v = 0; v < dag.vertex_count; ++v) {
        if (dag.predecessors[v].empty()) roots.emplace_back(circuit[v].qubits[0], v);
        if (dag.successors[v].empty()) terminals.emplace_back(circuit[v].qubits[0], v);
    }
    std::sort(roots.begin(), roots.end());
    std::sort(terminals.begin(), terminals.end());
    for (auto [q, v] : roots) dag.roots.push_back(v);
    for (auto [q, v] : terminals) dag.terminals.push_back(v);
    return dag;
}

BoolMatrix simplified_dag(const CircuitDag& dag) {
    int n = static_cast<int>(dag.roots.size());
    if (n == 0 || dag.roots.size() != dag.terminals.size()) {
        throw std::invalid_argument("simplified_dag: root/terminal mismatch");
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
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return b;
}

BoolMatrix matrix_biadjacency(const Circuit& circuit) {
    BoolMatrix b = BoolMatrix::identity(circuit.width());
    for (const auto& ins : circuit.instructions()) {
        if (ins.kind == OpKind::Gate && ins.qubits.size() >= 2) {
            apply_gate_update(b, ins.qubits);
        }
    }
    return b;
}

BoolMatrix biadjacency(const Circuit& circuit) {
    if (circuit.has_group_tags()) {
        return simplified_dag(build_dag(circuit));
    }
    return matrix_biadjacency(circuit);
}

std::vector<int> topological_order(const CircuitDag& dag,
                                   std::span<const std::pair<int, int>> extra_edges) {
    int m = dag.vertex_count;
    std::vector<int> indegree(m, 0);
    std::vector<std::vector<int>> extra_succ(m);
    for (int v = 0; v < m; ++v) {
        indegree[v] = static_cast<int>(dag.predecessors[v].size());
    }
    for (auto [u, v] : extra_edges) {
        extra_succ[u].push_back(v);
        ++indegree[v];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < m; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    std::vector<int> order;
    order.reserve(m);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : dag.successors[v]) {
            if (--indegree[w] == 0) ready.push(w);
        }
        for (int w : extra_succ[v]) {
            if (--indegree[w] == 0) ready.push(w);
        }
    }
    if (static_cast<int>(order.size()) != m) {
        throw std::runtime_error("topological_order: graph contains a cycle");
    }
    return order;
}

DynamicEmission emit_dynamic(const Circuit& circuit, const CircuitDag& dag,
                             std::span<const std::pair<int, int>> added_edges) {
    std::vector<char> is_root(dag.vertex_count, 0), is_terminal(dag.vertex_count, 0);
    for (int v : dag.roots) is_root[v] = 1;
    for (int v : dag.terminals) is_terminal[v] = 1;
    std::vector<char> tail_used(dag.vertex_count, 0), head_used(dag.vertex_count, 0);
    for (auto [t, r] : added_edges) {
        if (t < 0 || t >= dag.vertex_count || r < 0 || r >= dag.vertex_count ||
            !is_terminal[t] || !is_root[r]) {
            throw std::invalid_argument("emit_dynamic: edge must run terminal -> root");
        }
        if (tail_used[t] || head_used[r]) {
            throw std::invalid_argument("emit_dynamic: added edges share a vertex");
        }
        tail_used[t] = head_used[r] = 1;
    }

    std::vector<int> order = topological_order(dag, added_edges);  // throws on cycle
    std::vector<int> position(dag.vertex_count);
    for (int i = 0; i < dag.vertex_count; ++i) position[order[i]] = i;

    std::vector<Instruction> emitted;
    emitted.reserve(order.size());
    std::vector<int> source;  // emitted index -> original instruction id
    for (int v : order) {
        emitted.push_back(circuit[v]);
        emitted.back().group.reset();
        source.push_back(v);
    }

    // Relabel in topological order of the edge tails so that chained reuse
    // collapses onto one register.
    std::vector<std::pair<int, int>> edges(added_edges.begin(), added_edges.end());
    std::sort(edges.begin(), edges.end(), [&position](auto a, auto b) {
        return position[a.first] < position[b.first];
    });
    for (auto [t, r] : edges) {
        int reused = emitted[position[t]].qubits[0];
        int replaced = emitted[position[r]].qubits[0];
        for (auto& ins : emitted) {
            for (int& q : ins.qubits) {
                if (q == replaced) q = reused;
            }
        }
    }

    // Compact registers in first-use order.
    std::vector<int> remap(circuit.width(), -1);
    int next = 0;
    for (auto& ins : emitted) {
        for (int& q : ins.qubits) {
            if (remap[q] < 0) remap[q] = next++;
            q = remap[q];
        }
    }

    DynamicEmission result{Circuit(next, std::move(emitted)), {}, {}};
    for (size_t i = 0; i < source.size(); ++i) {
        const Instruction& original = circuit[source[i]];
        if (original.kind == OpKind::Measure) {
            result.measure_sources.push_back(original.qubits[0]);
        } else if (original.kind == OpKind::Reset) {
            result.reset_sources.push_back(original.qubits[0]);
        }
    }
    return result;
}

std::string to_dot(const CircuitDag& dag,
                   std::span<const std::pair<int, int>> added_edges) {
    std::string out = "digraph circuit {\n";
    for (int v = 0; v < dag.vertex_count; ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (auto [u, v] : dag.edges()) {
        out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    }
    for (auto [u, v] : added_edges) {
        out += "  " + std::to_string(u) + " -> " + std::to_string(v) +
               " [style=dashed];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace qreuse
