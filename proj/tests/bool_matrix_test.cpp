#include "qreuse/bool_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qreuse/circuit.hpp"
#include "qreuse/dag.hpp"
#include "qreuse/generators.hpp"
#include "test_util.hpp"

namespace qreuse {
namespace {

using testing::matrix_from_rows;

BoolMatrix random_matrix(int n, std::mt19937_64& rng, double density = 0.4) {
    BoolMatrix m(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if ((rng() % 1000) < density * 1000) m.set(r, c, true);
        }
    }
    return m;
}

/// Independent nilpotency oracle: a^n under Boolean product is zero.
bool power_oracle_nilpotent(const BoolMatrix& a) {
    BoolMatrix p = a;
    for (int i = 1; i < a.size(); ++i) p = bool_product(p, a);
    return p.all_zero();
}

TEST(BoolMatrixTest, IdentityIsProductIdentity) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        BoolMatrix a = random_matrix(5, rng);
        BoolMatrix id = BoolMatrix::identity(5);
        EXPECT_EQ(bool_product(id, a), a);
        EXPECT_EQ(bool_product(a, id), a);
    }
}

TEST(BoolMatrixTest, OnesTimesOnesIsOnes) {
    BoolMatrix j = BoolMatrix::ones(3);
    EXPECT_EQ(bool_product(j, j), j);
}

TEST(BoolMatrixTest, ProductIsAssociative) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BoolMatrix a = random_matrix(5, rng), b = random_matrix(5, rng),
                   c = random_matrix(5, rng);
        EXPECT_EQ(bool_product(bool_product(a, b), c), bool_product(a, bool_product(b, c)));
    }
}

TEST(BoolMatrixTest, ProductDimensionMismatchThrows) {
    EXPECT_THROW(bool_product(BoolMatrix(2), BoolMatrix(3)), std::invalid_argument);
}

TEST(BoolMatrixTest, CompositionMatchesProduct) {
    // Biadjacency of a composition equals the Boolean product of the parts'.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        FamilySpec spec{.family = Family::Random, .n = 4, .m = 5, .seed = rng()};
        Circuit c1 = generate(spec);
        spec.seed = rng();
        Circuit c2 = generate(spec);
        EXPECT_EQ(bool_product(matrix_biadjacency(c1), matrix_biadjacency(c2)),
                  matrix_biadjacency(compose(c1, c2)));
    }
}

TEST(GateUpdateTest, TwoColumnsBecomeTheirOr) {
    BoolMatrix m = BoolMatrix::identity(3);
    BoolMatrix updated = gate_update(m, std::vector<int>{0, 1});
    EXPECT_EQ(updated, matrix_from_rows({"110", "110", "001"}));
}

TEST(GateUpdateTest, EqualColumnsAreAFixedPoint) {
    BoolMatrix m = matrix_from_rows({"110", "110", "001"});
    EXPECT_EQ(gate_update(m, std::vector<int>{0, 1}), m);
}

TEST(GateUpdateTest, ChainedUpdatesAccumulate) {
    BoolMatrix m = BoolMatrix::identity(4);
    apply_gate_update(m, std::vector<int>{0, 1});
    apply_gate_update(m, std::vector<int>{1, 2});
    // Column 2 = e0 | e1 | e2.
    EXPECT_TRUE(m.get(0, 2));
    EXPECT_TRUE(m.get(1, 2));
    EXPECT_TRUE(m.get(2, 2));
    EXPECT_FALSE(m.get(3, 2));
}

TEST(GateUpdateTest, RejectsBadIndices) {
    BoolMatrix m = BoolMatrix::identity(3);
    EXPECT_THROW(gate_update(m, std::vector<int>{0, 0}), std::invalid_argument);
    EXPECT_THROW(gate_update(m, std::vector<int>{0, 3}), std::out_of_range);
}

TEST(GateUpdateTest, EquivalentToProductWithGateMatrix) {
    // gate_update(b, q) == b (*) B_q with B_q = I + sum of E_ij over the pair.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        BoolMatrix b = random_matrix(6, rng);
        int i = static_cast<int>(rng() % 6);
        int j = static_cast<int>(rng() % 5);
        if (j >= i) ++j;
        BoolMatrix bq = BoolMatrix::identity(6);
        bq.set(i, j, true);
        bq.set(j, i, true);
        EXPECT_EQ(gate_update(b, std::vector<int>{i, j}), bool_product(b, bq));
    }
}

TEST(NilpotencyTest, ZeroAndTriangularAreNilpotent) {
    EXPECT_TRUE(is_nilpotent(BoolMatrix(4)));
    BoolMatrix upper(4);
    for (int r = 0; r < 4; ++r) {
        for (int c = r + 1; c < 4; ++c) upper.set(r, c, true);
    }
    EXPECT_TRUE(is_nilpotent(upper));
}

TEST(NilpotencyTest, IdentityIsNot) {
    EXPECT_FALSE(is_nilpotent(BoolMatrix::identity(3)));
}

TEST(NilpotencyTest, AgreesWithPowerOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        BoolMatrix a = random_matrix(6, rng, 0.2);
        EXPECT_EQ(is_nilpotent(a), power_oracle_nilpotent(a)) << a.to_string();
    }
}

TEST(CandidateMatrixTest, OnesHasNoCandidates) {
    EXPECT_TRUE(candidate_matrix(BoolMatrix::ones(4)).all_zero());
}

TEST(CandidateMatrixTest, IdentityAllowsEverythingOffDiagonal) {
    BoolMatrix c = candidate_matrix(BoolMatrix::identity(3));
    EXPECT_EQ(c, matrix_from_rows({"011", "101", "110"}));
}

TEST(CandidateMatrixTest, InvolutionRecoversInput) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        BoolMatrix b = random_matrix(5, rng);
        EXPECT_EQ(candidate_matrix(candidate_matrix(b).transposed()).transposed(), b);
    }
}

TEST(CandidateMatrixTest, ChainCircuitHasSingleCandidate) {
    // CX(0,1); CX(1,2) leaves exactly one legal edge: terminal 0 -> root 2.
    Circuit c = testing::circuit_from_gates(3, {{0, 1}, {1, 2}});
    BoolMatrix cand = candidate_matrix(matrix_biadjacency(c));
    EXPECT_EQ(cand, matrix_from_rows({"001", "000", "000"}));
}

TEST(BoolMatrixTest, DebugDumpShowsRows) {
    BoolMatrix m = BoolMatrix::identity(2);
    EXPECT_EQ(m.to_string(), "10\n01\n");
}

TEST(BoolMatrixTest, CountsAndPredicates) {
    BoolMatrix m = matrix_from_rows({"101", "010", "111"});
    EXPECT_EQ(m.count(), 6);
    EXPECT_EQ(m.row_count(2), 3);
    EXPECT_EQ(m.col_count(1), 2);
    EXPECT_FALSE(m.all_ones());
    EXPECT_TRUE(BoolMatrix::ones(5).all_ones());
    EXPECT_TRUE(BoolMatrix(5).all_zero());
}

}  // namespace
}  // namespace qreuse
