#include "qreuse/reducibility.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qreuse/dag.hpp"

namespace qreuse {

namespace {

void require_untagged(const Circuit& circuit, const char* who) {
    if (circuit.has_group_tags()) {
        throw std::invalid_argument(std::string(who) +
                                    ": commutable group tags require the DFS method");
    }
}

void require_normalized(const Circuit& circuit) {
    if (!circuit.is_normalized_static()) {
        throw std::invalid_argument("reducibility check expects a normalized static circuit");
    }
}

}  // namespace

bool is_reducible_dfs(const Circuit& circuit) {
    require_normalized(circuit);
    return !simplified_dag(build_dag(circuit)).all_ones();
}

bool is_reducible_reachability(const Circuit& circuit) {
    require_untagged(circuit, "is_reducible_reachability");
    require_normalized(circuit);
    int n = circuit.width();
    int words = (n + 63) / 64;

    // reachable[i] = bitset of qubits known to reach qubit i (including i).
    std::vector<std::vector<uint64_t>> reachable(n, std::vector<uint64_t>(words, 0));
    for (int i = 0; i < n; ++i) reachable[i][i / 64] |= uint64_t{1} << (i % 64);

    std::vector<uint64_t> merged(words);
    for (const auto& ins : circuit.instructions()) {
        if (ins.kind != OpKind::Gate || ins.qubits.size() < 2) continue;
        std::fill(merged.begin(), merged.end(), 0);
        for (int q : ins.qubits) {
            for (int w = 0; w < words; ++w) merged[w] |= reachable[q][w];
        }
        for (int q : ins.qubits) reachable[q] = merged;
    }

    for (int i = 0; i < n; ++i) {
        int size = 0;
        for (int w = 0; w < words; ++w) size += std::popcount(reachable[i][w]);
        if (size < n) return true;
    }
    return false;
}

bool is_reducible_matrix(const Circuit& circuit) {
    require_untagged(circuit, "is_reducible_matrix");
    require_normalized(circuit);
    return !matrix_biadjacency(circuit).all_ones();
}

}  // namespace qreuse
