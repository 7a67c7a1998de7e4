#include "qreuse/generators.hpp"

#include <gtest/gtest.h>

#include "qreuse/dag.hpp"
#include "qreuse/exact.hpp"
#include "test_util.hpp"

namespace qreuse {
namespace {

TEST(GeneratorTest, BvShape) {
    Circuit bv = generate({.family = Family::BV, .n = 4});
    EXPECT_EQ(bv.width(), 5);
    EXPECT_TRUE(bv.is_normalized_static());
    int cx = 0;
    for (const auto& ins : bv.instructions()) {
        if (ins.gate == "CX") {
            ++cx;
            EXPECT_EQ(ins.qubits[1], 4);  // ancilla target
        }
    }
    EXPECT_EQ(cx, 4);
}

TEST(GeneratorTest, ClusterShape) {
    Circuit cluster = generate({.family = Family::Cluster, .w = 2, .d = 3});
    EXPECT_EQ(cluster.width(), 6);
    int cz = 0;
    for (const auto& ins : cluster.instructions()) cz += ins.gate == "CZ";
    EXPECT_EQ(cz, 3 * 1 + 2 * 2);  // column edges + bridges
}

TEST(GeneratorTest, AdderShape) {
    Circuit adder = generate({.family = Family::Adder, .k = 2});
    EXPECT_EQ(adder.width(), 7);
    EXPECT_THROW(generate({.family = Family::Adder, .n = 6, .k = 2}), std::invalid_argument);
}

TEST(GeneratorTest, RandomIsDeterministic) {
    FamilySpec spec{.family = Family::Random, .n = 10, .m = 15, .seed = 7};
    EXPECT_EQ(generate(spec).instructions(), generate(spec).instructions());
}

TEST(GeneratorTest, QaoaIsThreeRegularAndTagged) {
    Circuit qaoa = generate({.family = Family::QaoaMaxcut, .n = 8, .p = 1, .seed = 2});
    std::vector<int> degree(8, 0);
    int tagged = 0;
    for (const auto& ins : qaoa.instructions()) {
        if (ins.gate == "RZZ") {
            ++degree[ins.qubits[0]];
            ++degree[ins.qubits[1]];
            tagged += ins.group.has_value();
        }
    }
    for (int d : degree) EXPECT_EQ(d, 3);
    EXPECT_EQ(tagged, 12);  // 3n/2 edges, all in the layer group
}

TEST(GeneratorTest, InvalidParametersRejected) {
    EXPECT_THROW(generate({.family = Family::Cluster, .w = 2, .d = 0}), std::invalid_argument);
    EXPECT_THROW(generate({.family = Family::Adder, .k = 0}), std::invalid_argument);
    EXPECT_THROW(generate({.family = Family::Diamond, .n = 5}), std::invalid_argument);
    EXPECT_THROW(generate({.family = Family::BV, .n = 4, .secret = "10"}), std::invalid_argument);
    EXPECT_THROW(generate({.family = Family::QaoaMaxcut, .n = 7}), std::invalid_argument);
}

TEST(GeneratorTest, ClosedFormBiadjacencyAcrossTheGrid) {
    std::vector<FamilySpec> grid;
    for (int n = 2; n <= 8; ++n) grid.push_back({.family = Family::BV, .n = n});
    grid.push_back({.family = Family::BV, .n = 4, .secret = "1011"});
    grid.push_back({.family = Family::BV, .n = 5, .secret = "00100"});
    for (int n = 2; n <= 8; ++n) grid.push_back({.family = Family::DJ, .n = n});
    grid.push_back({.family = Family::DJ, .n = 4, .constant_oracle = true});
    for (int n = 2; n <= 4; ++n) grid.push_back({.family = Family::Simon, .n = n});
    for (int n = 2; n <= 6; ++n) grid.push_back({.family = Family::QFT, .n = n});
    for (int n = 2; n <= 8; ++n) {
        for (int l = 1; l <= n; ++l) {
            grid.push_back({.family = Family::Linear, .n = n, .l = l});
            if (l <= 3) {
                grid.push_back({.family = Family::Circular, .n = n, .l = l});
                grid.push_back({.family = Family::Full, .n = n, .l = l});
            }
            if (l <= 4) grid.push_back({.family = Family::Pairwise, .n = n, .l = l});
        }
    }
    for (int n = 4; n <= 10; n += 2) grid.push_back({.family = Family::Diamond, .n = n});
    for (int w = 1; w <= 3; ++w) {
        for (int d = 1; d <= 4; ++d) {
            grid.push_back({.family = Family::Cluster, .w = w, .d = d});
        }
    }
    for (int k = 1; k <= 4; ++k) grid.push_back({.family = Family::Adder, .k = k});

    for (const auto& spec : grid) {
        EXPECT_EQ(matrix_biadjacency(generate(spec)), expected_biadjacency(spec))
            << family_name(spec.family) << " n=" << spec.n << " l=" << spec.l
            << " w=" << spec.w << " d=" << spec.d << " k=" << spec.k;
    }
}

TEST(GeneratorTest, ExpectedWidthsMatchPublishedValues) {
    EXPECT_EQ(expected_optimal_width({.family = Family::Pairwise, .n = 8, .l = 2}), 5);
    EXPECT_EQ(expected_optimal_width({.family = Family::Cluster, .w = 3, .d = 5}), 4);
    EXPECT_EQ(expected_optimal_width({.family = Family::Adder, .k = 1}), 3);
    EXPECT_EQ(expected_optimal_width({.family = Family::DJ, .n = 6}), 2);
    EXPECT_EQ(expected_optimal_width({.family = Family::DJ, .n = 6, .constant_oracle = true}), 1);
    EXPECT_EQ(expected_optimal_width({.family = Family::Linear, .n = 6, .l = 9}), 6);
    EXPECT_EQ(expected_optimal_width({.family = Family::Circular, .n = 6, .l = 2}), 6);
    EXPECT_THROW(expected_optimal_width({.family = Family::Random, .n = 5, .m = 5}),
                 std::invalid_argument);
    EXPECT_THROW(expected_biadjacency({.family = Family::QaoaMaxcut, .n = 8}),
                 std::invalid_argument);
}

TEST(GeneratorTest, ExactSolverReproducesExpectedWidths) {
    std::vector<FamilySpec> grid = {
        {.family = Family::BV, .n = 3},
        {.family = Family::DJ, .n = 3},
        {.family = Family::Simon, .n = 2},
        {.family = Family::QFT, .n = 3},
        {.family = Family::Linear, .n = 5, .l = 2},
        {.family = Family::Circular, .n = 5, .l = 1},
        {.family = Family::Pairwise, .n = 6, .l = 1},
        {.family = Family::Full, .n = 4, .l = 1},
        {.family = Family::Diamond, .n = 6},
        {.family = Family::Cluster, .w = 2, .d = 2},
        {.family = Family::Adder, .k = 1},
        {.family = Family::Adder, .k = 2},
    };
    for (const auto& spec : grid) {
        EXPECT_EQ(optimal_compile(generate(spec)).compiled_width,
                  expected_optimal_width(spec))
            << family_name(spec.family);
    }
}

TEST(GeneratorTest, TaggedIqpNeverWiderThanUntagged) {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        FamilySpec spec{.family = Family::RandomIqp, .n = 6, .m = 7, .seed = seed};
        Circuit tagged = generate(spec);
        spec.tagged = false;
        Circuit untagged = generate(spec);
        EXPECT_LE(optimal_compile(tagged).compiled_width,
                  optimal_compile(untagged).compiled_width)
            << "seed " << seed;
    }
}

TEST(GeneratorTest, StripSingleQubitGatesKeepsBiadjacency) {
    FamilySpec spec{.family = Family::QFT, .n = 4};
    FamilySpec stripped = spec;
    stripped.include_single_qubit_gates = false;
    EXPECT_EQ(matrix_biadjacency(generate(spec)), matrix_biadjacency(generate(stripped)));
    EXPECT_LT(generate(stripped).size(), generate(spec).size());
}

}  // namespace
}  // namespace qreuse
