#include "qreuse/reducibility.hpp"

#include <gtest/gtest.h>

#include "qreuse/generators.hpp"
#include "test_util.hpp"

namespace qreuse {
namespace {

using testing::circuit_from_gates;

// Irreducible 4-qubit circuit of five CNOTs whose every single-gate deletion
// is reducible. Found by exhaustive search over all 6^5 placements; frozen.
const std::vector<std::vector<int>> kTightIrreducible = {
    {0, 1}, {0, 2}, {0, 3}, {0, 1}, {0, 2}};

TEST(ReducibilityTest, QftIsIrreducible) {
    Circuit qft = generate({.family = Family::QFT, .n = 4});
    EXPECT_FALSE(is_reducible_dfs(qft));
    EXPECT_FALSE(is_reducible_reachability(qft));
    EXPECT_FALSE(is_reducible_matrix(qft));
}

TEST(ReducibilityTest, BvIsReducible) {
    Circuit bv = generate({.family = Family::BV, .n = 4});
    EXPECT_TRUE(is_reducible_dfs(bv));
    EXPECT_TRUE(is_reducible_reachability(bv));
    EXPECT_TRUE(is_reducible_matrix(bv));
}

TEST(ReducibilityTest, TightIrreducibleCircuit) {
    Circuit c = circuit_from_gates(4, kTightIrreducible);
    EXPECT_FALSE(is_reducible_dfs(c));
    for (size_t skip = 0; skip < kTightIrreducible.size(); ++skip) {
        std::vector<std::vector<int>> gates;
        for (size_t i = 0; i < kTightIrreducible.size(); ++i) {
            if (i != skip) gates.push_back(kTightIrreducible[i]);
        }
        EXPECT_TRUE(is_reducible_dfs(circuit_from_gates(4, gates))) << skip;
    }
}

TEST(ReducibilityTest, CircularLayers) {
    EXPECT_TRUE(is_reducible_reachability(generate({.family = Family::Circular, .n = 4, .l = 1})));
    EXPECT_FALSE(is_reducible_reachability(generate({.family = Family::Circular, .n = 3, .l = 1})));
    EXPECT_FALSE(is_reducible_reachability(generate({.family = Family::Circular, .n = 5, .l = 2})));
}

TEST(ReducibilityTest, SingleTwoQubitGateIsIrreducible) {
    EXPECT_FALSE(is_reducible_reachability(circuit_from_gates(2, {{0, 1}})));
}

TEST(ReducibilityTest, LinearLayerThreshold) {
    EXPECT_TRUE(is_reducible_matrix(generate({.family = Family::Linear, .n = 5, .l = 3})));
    EXPECT_FALSE(is_reducible_matrix(generate({.family = Family::Linear, .n = 5, .l = 4})));
}

TEST(ReducibilityTest, PairwiseLayerThreshold) {
    EXPECT_TRUE(is_reducible_matrix(generate({.family = Family::Pairwise, .n = 6, .l = 2})));
    EXPECT_FALSE(is_reducible_matrix(generate({.family = Family::Pairwise, .n = 6, .l = 3})));
}

TEST(ReducibilityTest, WideGateMakesDiffusionIrreducible) {
    // A diffusion-operator style circuit: single-qubit dressing around one
    // n-qubit gate.
    std::vector<Instruction> gates;
    for (int q = 0; q < 4; ++q) gates.push_back({0, OpKind::Gate, "H", {q}, {}, {}});
    for (int q = 0; q < 4; ++q) gates.push_back({0, OpKind::Gate, "X", {q}, {}, {}});
    gates.push_back({0, OpKind::Gate, "MCZ", {0, 1, 2, 3}, {}, {}});
    for (int q = 0; q < 4; ++q) gates.push_back({0, OpKind::Gate, "X", {q}, {}, {}});
    for (int q = 0; q < 4; ++q) gates.push_back({0, OpKind::Gate, "H", {q}, {}, {}});
    Circuit diffusion = normalize(Circuit(4, std::move(gates)));
    EXPECT_FALSE(is_reducible_matrix(diffusion));
}

TEST(ReducibilityTest, DecidersAgreeOnRandomCircuits) {
    int reducible_seen = 0;
    for (uint64_t seed = 0; seed < 500; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);  // up to 12 qubits
        int m = static_cast<int>(seed % (2 * n)) + 1;
        Circuit c = generate({.family = Family::Random,
                              .n = n,
                              .m = m,
                              .seed = seed * 7919 + 1});
        bool dfs = is_reducible_dfs(c);
        bool reach = is_reducible_reachability(c);
        bool matrix = is_reducible_matrix(c);
        EXPECT_EQ(dfs, reach) << "seed " << seed;
        EXPECT_EQ(dfs, matrix) << "seed " << seed;
        reducible_seen += dfs;
    }
    // The sweep must exercise both answers.
    EXPECT_GT(reducible_seen, 50);
    EXPECT_LT(reducible_seen, 450);
}

TEST(ReducibilityTest, TaggedCircuitsNeedTheDfsMethod) {
    Circuit tagged = generate({.family = Family::RandomIqp, .n = 4, .m = 4, .seed = 1});
    EXPECT_THROW(is_reducible_reachability(tagged), std::invalid_argument);
    EXPECT_THROW(is_reducible_matrix(tagged), std::invalid_argument);
    (void)is_reducible_dfs(tagged);  // must not throw
}

TEST(ReducibilityTest, FlexibleDependenciesOnlyHelp) {
    // Whenever the imposed-order circuit is reducible, the tagged version is.
    for (uint64_t seed = 0; seed < 40; ++seed) {
        FamilySpec spec{.family = Family::RandomIqp, .n = 5, .m = 6, .seed = seed};
        Circuit tagged = generate(spec);
        spec.tagged = false;
        Circuit untagged = generate(spec);
        if (is_reducible_matrix(untagged)) {
            EXPECT_TRUE(is_reducible_dfs(tagged)) << seed;
        }
    }
}

TEST(ReducibilityTest, AppendingGatesNeverRestoresReducibility) {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Circuit c = generate({.family = Family::Random, .n = 4, .m = 8, .seed = seed});
        if (is_reducible_matrix(c)) continue;
        auto gates = c.gates();
        gates.push_back({0, OpKind::Gate, "CX",
                         {static_cast<int>(seed % 4),
                          static_cast<int>((seed + 1) % 4)}, {}, {}});
        EXPECT_FALSE(is_reducible_matrix(normalize(Circuit(4, std::move(gates)))));
    }
}

}  // namespace
}  // namespace qreuse
