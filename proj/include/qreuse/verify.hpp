#pragma once

#include <map>
#include <string>
#include <vector>

#include "qreuse/circuit.hpp"

namespace qreuse {

/// Exact outcome distribution: one bit per MEASURE in instruction order,
/// mapped to its probability. Probabilities sum to 1 within 1e-12.
using OutcomeDistribution = std::map<std::vector<bool>, double>;

/// Convert a dynamic circuit into an equivalent static one: each RESET opens
/// a fresh register (numbered in reset order) and every later operation on
/// the reset register moves to it; measurements are deferred to the end and
/// the result is normalized. Static inputs come back unchanged; the output
/// width equals the number of RESETs in the input.
Circuit expand_dynamic(const Circuit& circuit);

/// Exact distribution by statevector evolution; a mid-circuit MEASURE
/// branches into both outcomes weighted by their probabilities and RESET
/// projects the register back to |0>. Limits: width <= 12 registers and at
/// most 16 measurements. Rotation gates missing their angle default to a
/// fixed pseudo-random value derived from the instruction id.
OutcomeDistribution exact_distribution(const Circuit& circuit);

double total_variation_distance(const OutcomeDistribution& a,
                                const OutcomeDistribution& b);

/// True iff the two circuits' outcome distributions match within `tol` total
/// variation distance. `b_measure_to_a` maps the k-th measurement of `b` to a
/// measurement index of `a` (the measurement provenance a compiler records);
/// when empty, measurements are matched by index.
bool assert_equivalent(const Circuit& a, const Circuit& b, double tol,
                       const std::vector<int>& b_measure_to_a = {});

/// Lint for commutable blocks: warn about tagged gate pairs that share a
/// qubit but do not actually commute. Warnings only; an empty result means
/// every tagged block is genuinely commuting.
std::vector<std::string> commutation_warnings(const Circuit& circuit);

}  // namespace qreuse
