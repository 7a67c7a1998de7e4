#include "qreuse/circuit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace qreuse {

namespace {

// Known gate arities; unknown gate names are accepted with any arity >= 1.
const std::map<std::string, int>& known_gate_arities() {
    static const std::map<std::string, int> arities = {
        {"H", 1},  {"X", 1},  {"Y", 1},    {"Z", 1},   {"S", 1},
        {"T", 1},  {"RX", 1}, {"RY", 1},   {"RZ", 1},  {"CX", 2},
        {"CZ", 2}, {"CP", 2}, {"SWAP", 2}, {"RZZ", 2}, {"CCX", 3},
    };
    return arities;
}

void validate_instruction(const Instruction& ins, int width) {
    if (ins.qubits.empty()) {
        throw std::invalid_argument("instruction must act on at least one qubit");
    }
    for (int q : ins.qubits) {
        if (q < 0 || q >= width) {
            throw std::invalid_argument("qubit index out of range: " + std::to_string(q));
        }
    }
    for (size_t i = 0; i < ins.qubits.size(); ++i) {
        for (size_t j = i + 1; j < ins.qubits.size(); ++j) {
            if (ins.qubits[i] == ins.qubits[j]) {
                throw std::invalid_argument("duplicate qubit in one instruction");
            }
        }
    }
    if (ins.kind != OpKind::Gate) {
        if (ins.qubits.size() != 1) {
            throw std::invalid_argument("RESET/MEASURE must act on exactly one qubit");
        }
        if (ins.param.has_value()) {
            throw std::invalid_argument("RESET/MEASURE cannot carry a parameter");
        }
        if (ins.group.has_value()) {
            throw std::invalid_argument("RESET/MEASURE cannot carry a group tag");
        }
    } else {
        auto it = known_gate_arities().find(ins.gate);
        if (it != known_gate_arities().end() &&
            static_cast<int>(ins.qubits.size()) != it->second) {
            throw std::invalid_argument("gate " + ins.gate + " expects " +
                                        std::to_string(it->second) + " qubits");
        }
    }
}

}  // namespace

Circuit::Circuit(int width, std::vector<Instruction> instructions)
    : width_(width), instructions_(std::move(instructions)) {
    if (width_ < 1) {
        throw std::invalid_argument("circuit width must be positive");
    }
    for (int i = 0; i < static_cast<int>(instructions_.size()); ++i) {
        validate_instruction(instructions_[i], width_);
        instructions_[i].id = i;
    }
}

bool Circuit::has_group_tags() const {
    return std::any_of(instructions_.begin(), instructions_.end(),
                       [](const Instruction& ins) { return ins.group.has_value(); });
}

int Circuit::gate_count() const {
    return static_cast<int>(std::count_if(
        instructions_.begin(), instructions_.end(),
        [](const Instruction& ins) { return ins.kind == OpKind::Gate; }));
}

int Circuit::measure_count() const {
    return static_cast<int>(std::count_if(
        instructions_.begin(), instructions_.end(),
        [](const Instruction& ins) { return ins.kind == OpKind::Measure; }));
}

int Circuit::reset_count() const {
    return static_cast<int>(std::count_if(
        instructions_.begin(), instructions_.end(),
        [](const Instruction& ins) { return ins.kind == OpKind::Reset; }));
}

std::vector<Instruction> Circuit::gates() const {
    std::vector<Instruction> out;
    for (const auto& ins : instructions_) {
        if (ins.kind == OpKind::Gate) out.push_back(ins);
    }
    return out;
}

bool Circuit::is_static() const {
    std::vector<bool> used(width_, false);
    std::vector<bool> measured(width_, false);
    for (const auto& ins : instructions_) {
        for (int q : ins.qubits) {
            if (measured[q]) return false;
            if (ins.kind == OpKind::Reset && used[q]) return false;
            used[q] = true;
            if (ins.kind == OpKind::Measure) measured[q] = true;
        }
    }
    return true;
}

bool Circuit::is_normalized_static() const {
    if (size() < 2 * width_ || !is_static()) return false;
    std::vector<bool> seen(width_, false);
    for (int i = 0; i < width_; ++i) {
        const auto& ins = instructions_[i];
        if (ins.kind != OpKind::Reset || seen[ins.qubits[0]]) return false;
        seen[ins.qubits[0]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (int i = size() - width_; i < size(); ++i) {
        const auto& ins = instructions_[i];
        if (ins.kind != OpKind::Measure || seen[ins.qubits[0]]) return false;
        seen[ins.qubits[0]] = true;
    }
    for (int i = width_; i < size() - width_; ++i) {
        if (instructions_[i].kind != OpKind::Gate) return false;
    }
    return true;
}

bool Circuit::is_valid_dynamic() const {
    // Per register: RESET (use* MEASURE RESET)* use* MEASURE, i.e. the state
    // machine fresh -> reset -> in-use -> measured -> reset -> ...
    enum class State { Fresh, InUse, Measured };
    std::vector<State> state(width_, State::Fresh);
    for (const auto& ins : instructions_) {
        for (int q : ins.qubits) {
            switch (ins.kind) {
                case OpKind::Reset:
                    if (state[q] == State::InUse) return false;
                    state[q] = State::InUse;
                    break;
                case OpKind::Measure:
                    if (state[q] != State::InUse) return false;
                    state[q] = State::Measured;
                    break;
                case OpKind::Gate:
                    if (state[q] != State::InUse) return false;
                    break;
            }
        }
    }
    for (State s : state) {
        if (s == State::InUse) return false;
    }
    return true;
}

Circuit Circuit::without_group_tags() const {
    std::vector<Instruction> out = instructions_;
    for (auto& ins : out) ins.group.reset();
    return Circuit(width_, std::move(out));
}

Circuit parse_circuit(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed circuit document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("width") || !doc.contains("instructions")) {
        throw std::invalid_argument("circuit document needs \"width\" and \"instructions\"");
    }
    int width;
    std::vector<Instruction> instructions;
    try {
        width = doc.at("width").get<int>();
        for (const auto& item : doc.at("instructions")) {
            Instruction ins;
            std::string type = item.at("type").get<std::string>();
            if (type == "RESET") {
                ins.kind = OpKind::Reset;
            } else if (type == "MEASURE") {
                ins.kind = OpKind::Measure;
            } else if (type == "GATE") {
                ins.kind = OpKind::Gate;
                if (item.contains("gate") && !item.at("gate").is_null()) {
                    ins.gate = item.at("gate").get<std::string>();
                }
            } else {
                throw std::invalid_argument("unknown instruction type: " + type);
            }
            ins.qubits = item.at("qubits").get<std::vector<int>>();
            if (item.contains("param") && !item.at("param").is_null()) {
                ins.param = item.at("param").get<double>();
            }
            if (item.contains("group") && !item.at("group").is_null()) {
                ins.group = item.at("group").get<int>();
            }
            instructions.push_back(std::move(ins));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed circuit document: ") + e.what());
    }
    return Circuit(width, std::move(instructions));
}

std::string serialize_circuit(const Circuit& circuit) {
    std::string out = "{\"width\": " + std::to_string(circuit.width()) +
                      ", \"instructions\": [\n";
    for (int i = 0; i < circuit.size(); ++i) {
        const Instruction& ins = circuit[i];
        nlohmann::ordered_json item;
        item["id"] = ins.id;
        switch (ins.kind) {
            case OpKind::Reset: item["type"] = "RESET"; break;
            case OpKind::Measure: item["type"] = "MEASURE"; break;
            case OpKind::Gate:
                item["type"] = "GATE";
                item["gate"] = ins.gate;
                break;
        }
        item["qubits"] = ins.qubits;
        if (ins.param) item["param"] = *ins.param;
        if (ins.group) item["group"] = *ins.group;
        out += "  " + item.dump();
        out += (i + 1 < circuit.size()) ? ",\n" : "\n";
    }
    out += "]}\n";
    return out;
}

Circuit normalize(const Circuit& circuit) {
    int n = circuit.width();
    std::vector<bool> used(n, false);
    std::vector<bool> measured(n, false);
    std::vector<Instruction> body;
    for (const auto& ins : circuit.instructions()) {
        for (int q : ins.qubits) {
            if (measured[q]) {
                throw std::invalid_argument(
                    "dynamic input: register used after its measurement");
            }
        }
        if (ins.kind == OpKind::Reset) {
            int q = ins.qubits[0];
            if (used[q]) {
                throw std::invalid_argument("dynamic input: mid-circuit reset");
            }
            used[q] = true;
            continue;  // re-emitted canonically below
        }
        if (ins.kind == OpKind::Measure) {
            measured[ins.qubits[0]] = true;
            used[ins.qubits[0]] = true;
            continue;
        }
        for (int q : ins.qubits) used[q] = true;
        body.push_back(ins);
    }
    std::vector<Instruction> result;
    result.reserve(body.size() + 2 * n);
    for (int q = 0; q < n; ++q) {
        result.push_back({0, OpKind::Reset, "", {q}, std::nullopt, std::nullopt});
    }
    result.insert(result.end(), body.begin(), body.end());
    for (int q = 0; q < n; ++q) {
        result.push_back({0, OpKind::Measure, "", {q}, std::nullopt, std::nullopt});
    }
    return Circuit(n, std::move(result));
}

Circuit compose(const Circuit& first, const Circuit& second) {
    if (first.width() != second.width()) {
        throw std::invalid_argument("compose: width mismatch");
    }
    if (!first.is_normalized_static() || !second.is_normalized_static()) {
        throw std::invalid_argument("compose: inputs must be normalized static circuits");
    }
    int n = first.width();
    std::vector<Instruction> result;
    for (int i = 0; i < n; ++i) result.push_back(first[i]);
    for (const auto& ins : first.gates()) result.push_back(ins);

    // Keep group tags of the two parts disjoint; only tag equality matters.
    int offset = 0;
    for (const auto& ins : first.instructions()) {
        if (ins.group) offset = std::max(offset, *ins.group + 1);
    }
    for (auto ins : second.gates()) {
        if (ins.group) ins.group = *ins.group + offset;
        result.push_back(std::move(ins));
    }
    for (int i = second.size() - n; i < second.size(); ++i) result.push_back(second[i]);
    return Circuit(n, std::move(result));
}

int depth(const Circuit& circuit) {
    std::vector<int> level(circuit.width(), 0);
    int result = 0;
    for (const auto& ins : circuit.instructions()) {
        int d = 0;
        for (int q : ins.qubits) d = std::max(d, level[q]);
        ++d;
        for (int q : ins.qubits) level[q] = d;
        result = std::max(result, d);
    }
    return result;
}

}  // namespace qreuse
