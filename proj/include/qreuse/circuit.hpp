#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qreuse {

enum class OpKind { Reset, Measure, Gate };

/// One quantum operation. `gate` is only meaningful for OpKind::Gate and
/// `group` marks membership in a commutable block; absent means the operation
/// commutes with nothing.
struct Instruction {
    int id = 0;
    OpKind kind = OpKind::Gate;
    std::string gate;
    std::vector<int> qubits;
    std::optional<double> param;
    std::optional<int> group;

    bool operator==(const Instruction&) const = default;
};

/// An ordered instruction list over `width` qubit registers.
///
/// Instruction ids are re-densified on construction so that id == position in
/// the list; every structural edit goes through the constructor and keeps the
/// DAG-vertex/instruction correspondence trivial. Values are immutable after
/// construction.
class Circuit {
public:
    Circuit() : width_(1) {}
    Circuit(int width, std::vector<Instruction> instructions);

    int width() const { return width_; }
    int size() const { return static_cast<int>(instructions_.size()); }
    const std::vector<Instruction>& instructions() const { return instructions_; }
    const Instruction& operator[](int id) const { return instructions_[id]; }

    bool has_group_tags() const;
    int gate_count() const;
    int measure_count() const;
    int reset_count() const;

    /// The GATE subsequence, order preserved.
    std::vector<Instruction> gates() const;

    /// No reset after another operation on the same register and no operation
    /// after a measurement on the same register.
    bool is_static() const;

    /// Static, begins with one RESET per qubit, ends with one MEASURE per qubit.
    bool is_normalized_static() const;

    /// Every register follows the pattern (RESET use* MEASURE)+.
    bool is_valid_dynamic() const;

    /// Identical circuit with every group tag removed.
    Circuit without_group_tags() const;

private:
    int width_;
    std::vector<Instruction> instructions_;
};

/// Parse a circuit document (see serialize_circuit for the schema).
/// Throws std::invalid_argument on malformed input.
Circuit parse_circuit(const std::string& text);

/// Emit the circuit as a JSON document, one instruction per line:
///   {"width": n, "instructions": [
///     {"id": 0, "type": "RESET", "qubits": [0]},
///     {"id": 1, "type": "GATE", "gate": "H", "qubits": [0]},
///     ...
///   ]}
/// "param" and "group" are omitted when absent.
std::string serialize_circuit(const Circuit& circuit);

/// Prepend missing leading RESETs and append missing trailing MEASUREs so the
/// result is a normalized static circuit. Idempotent; preserves the gate
/// subsequence exactly. Throws on dynamic input (mid-circuit reset or a
/// register used after its measurement).
Circuit normalize(const Circuit& circuit);

/// Sequential composition: first's RESETs, first's gates, second's gates,
/// second's MEASUREs. Both inputs must be normalized static circuits of equal
/// width. Group tags of `second` are shifted to stay disjoint from `first`'s.
Circuit compose(const Circuit& first, const Circuit& second);

/// Length of the longest chain of instructions linked by shared qubits.
/// Commutable tags are ignored (conservative schedule).
int depth(const Circuit& circuit);

}  // namespace qreuse
