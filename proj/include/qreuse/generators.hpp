#pragma once

#include <cstdint>
#include <string>

#include "qreuse/bool_matrix.hpp"
#include "qreuse/circuit.hpp"

namespace qreuse {

enum class Family {
    DJ,
    BV,
    Simon,
    QFT,
    Linear,
    Circular,
    Pairwise,
    Full,
    Diamond,
    Cluster,
    Adder,
    QaoaMaxcut,
    Random,
    RandomIqp,
};

Family family_from_name(const std::string& name);
std::string family_name(Family family);

/// Parameters for one benchmark circuit. Which fields matter depends on the
/// family:
///   DJ          n (function arity), constant_oracle
///   BV          n, secret (defaults to all ones)
///   Simon       n (half width), secret (defaults to all ones)
///   QFT         n
///   Linear / Circular / Pairwise / Full   n, l (layers)
///   Diamond     n (total width, even)
///   Cluster     w, d (grid rows x columns)
///   Adder       k (bits; width 3k+1)
///   QaoaMaxcut  n (even, >= 4), p (layers), seed
///   Random      n, m (two-qubit gates), seed
///   RandomIqp   n, m (diagonal two-qubit gates), seed, tagged
struct FamilySpec {
    Family family = Family::Random;
    int n = 0;
    int l = 1;
    int p = 1;
    int w = 0;
    int d = 0;
    int k = 0;
    int m = 0;
    uint64_t seed = 0;
    bool tagged = true;
    bool constant_oracle = false;
    std::string secret;
    /// Emit the single-qubit dressing gates the constructions carry; turning
    /// this off speeds up large sweeps without changing any compilation result.
    bool include_single_qubit_gates = true;
};

/// Construct the normalized static circuit for the given family parameters.
/// Deterministic for a fixed spec (including seed).
Circuit generate(const FamilySpec& spec);

/// The published closed-form biadjacency matrix of a structured family at the
/// given parameters. Throws for families without one (Random, RandomIqp,
/// QaoaMaxcut).
BoolMatrix expected_biadjacency(const FamilySpec& spec);

/// The published optimal compiled width of a structured family. Throws for
/// families without one.
int expected_optimal_width(const FamilySpec& spec);

}  // namespace qreuse
