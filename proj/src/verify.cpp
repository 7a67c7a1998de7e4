#include "qreuse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qreuse {

namespace {

using Amplitudes = std::vector<std::complex<double>>;
constexpr double kBranchEps = 1e-15;

double default_angle(int id) {
    double frac = std::fmod(0.6180339887498949 * (id + 1), 1.0);
    return 2.0 * std::numbers::pi * frac;
}

struct Branch {
    Amplitudes amp;
    double weight = 1.0;
    std::vector<bool> bits;
};

struct Unitary1 {
    std::complex<double> m00, m01, m10, m11;
};

void apply_single(Amplitudes& amp, int q, const Unitary1& u) {
    size_t stride = size_t{1} << q;
    for (size_t base = 0; base < amp.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; ++i) {
            auto a0 = amp[i], a1 = amp[i + stride];
            amp[i] = u.m00 * a0 + u.m01 * a1;
            amp[i + stride] = u.m10 * a0 + u.m11 * a1;
        }
    }
}

void apply_phase_if(Amplitudes& amp, std::complex<double> phase,
                    auto&& predicate) {
    for (size_t i = 0; i < amp.size(); ++i) {
        if (predicate(i)) amp[i] *= phase;
    }
}

double angle_of(const Instruction& ins) {
    return ins.param ? *ins.param : default_angle(ins.id);
}

void apply_gate(Amplitudes& amp, const Instruction& ins) {
    using namespace std::complex_literals;
    const auto& q = ins.qubits;
    auto bit = [](size_t i, int b) { return (i >> b) & 1; };
    const std::string& g = ins.gate;
    if (g == "H") {
        double s = 1.0 / std::sqrt(2.0);
        apply_single(amp, q[0], {s, s, s, -s});
    } else if (g == "X") {
        apply_single(amp, q[0], {0, 1, 1, 0});
    } else if (g == "Y") {
        apply_single(amp, q[0], {0, -1i, 1i, 0});
    } else if (g == "Z") {
        apply_phase_if(amp, -1.0, [&](size_t i) { return bit(i, q[0]); });
    } else if (g == "S") {
        apply_phase_if(amp, 1i, [&](size_t i) { return bit(i, q[0]); });
    } else if (g == "T") {
        apply_phase_if(amp, std::polar(1.0, std::numbers::pi / 4),
                       [&](size_t i) { return bit(i, q[0]); });
    } else if (g == "RX") {
        double h = angle_of(ins) / 2;
        apply_single(amp, q[0],
                     {std::cos(h), -1i * std::sin(h), -1i * std::sin(h), std::cos(h)});
    } else if (g == "RY") {
        double h = angle_of(ins) / 2;
        apply_single(amp, q[0], {std::cos(h), -std::sin(h), std::sin(h), std::cos(h)});
    } else if (g == "RZ") {
        double h = angle_of(ins) / 2;
        Unitary1 u{std::polar(1.0, -h), 0, 0, std::polar(1.0, h)};
        apply_single(amp, q[0], u);
    } else if (g == "CX") {
        size_t c = size_t{1} << q[0], t = size_t{1} << q[1];
        for (size_t i = 0; i < amp.size(); ++i) {
            if ((i & c) && !(i & t)) std::swap(amp[i], amp[i | t]);
        }
    } else if (g == "CZ") {
        apply_phase_if(amp, -1.0,
                       [&](size_t i) { return bit(i, q[0]) && bit(i, q[1]); });
    } else if (g == "CP") {
        apply_phase_if(amp, std::polar(1.0, angle_of(ins)),
                       [&](size_t i) { return bit(i, q[0]) && bit(i, q[1]); });
    } else if (g == "RZZ") {
        double h = angle_of(ins) / 2;
        auto plus = std::polar(1.0, h), minus = std::polar(1.0, -h);
        for (size_t i = 0; i < amp.size(); ++i) {
            amp[i] *= (bit(i, q[0]) == bit(i, q[1])) ? minus : plus;
        }
    } else if (g == "SWAP") {
        size_t a = size_t{1} << q[0], b = size_t{1} << q[1];
        for (size_t i = 0; i < amp.size(); ++i) {
            if ((i & a) && !(i & b)) std::swap(amp[i], amp[(i & ~a) | b]);
        }
    } else if (g == "CCX") {
        size_t c0 = size_t{1} << q[0], c1 = size_t{1} << q[1], t = size_t{1} << q[2];
        for (size_t i = 0; i < amp.size(); ++i) {
            if ((i & c0) && (i & c1) && !(i & t)) std::swap(amp[i], amp[i | t]);
        }
    } else {
        throw std::invalid_argument("unknown gate name: " + ins.gate);
    }
}

/// Split a branch on register q. Outcome weights are exact; zero-probability
/// branches are pruned.
std::pair<std::optional<Branch>, std::optional<Branch>> split_on(
    const Branch& branch, int q) {
    size_t mask = size_t{1} << q;
    double p1 = 0.0;
    for (size_t i = 0; i < branch.amp.size(); ++i) {
        if (i & mask) p1 += std::norm(branch.amp[i]);
    }
    double p0 = 1.0 - p1;
    std::optional<Branch> zero, one;
    if (p0 > kBranchEps) {
        Branch b;
        b.amp.assign(branch.amp.size(), 0.0);
        double scale = 1.0 / std::sqrt(p0);
        for (size_t i = 0; i < branch.amp.size(); ++i) {
            if (!(i & mask)) b.amp[i] = branch.amp[i] * scale;
        }
        b.weight = branch.weight * p0;
        b.bits = branch.bits;
        zero = std::move(b);
    }
    if (p1 > kBranchEps) {
        Branch b;
        b.amp.assign(branch.amp.size(), 0.0);
        double scale = 1.0 / std::sqrt(p1);
        for (size_t i = 0; i < branch.amp.size(); ++i) {
            if (i & mask) b.amp[i] = branch.amp[i] * scale;
        }
        b.weight = branch.weight * p1;
        b.bits = branch.bits;
        one = std::move(b);
    }
    return {std::move(zero), std::move(one)};
}

}  // namespace

Circuit expand_dynamic(const Circuit& circuit) {
    if (!circuit.is_valid_dynamic()) {
        throw std::invalid_argument(
            "expand_dynamic expects a circuit whose registers follow (RESET use* MEASURE)+");
    }
    int width = circuit.width();
    std::vector<int> current(width, -1);  // register -> fresh label
    int fresh = 0;
    std::vector<Instruction> gates, measures;
    for (const auto& ins : circuit.instructions()) {
        if (ins.kind == OpKind::Reset) {
            current[ins.qubits[0]] = fresh++;
            continue;
        }
        Instruction moved = ins;
        for (int& q : moved.qubits) q = current[q];
        (ins.kind == OpKind::Measure ? measures : gates).push_back(std::move(moved));
    }
    gates.insert(gates.end(), measures.begin(), measures.end());
    return normalize(Circuit(std::max(fresh, 1), std::move(gates)));
}

OutcomeDistribution exact_distribution(const Circuit& circuit) {
    if (circuit.width() > 12) {
        throw std::invalid_argument("exact_distribution is limited to 12 registers");
    }
    if (circuit.measure_count() > 16) {
        throw std::invalid_argument("exact_distribution is limited to 16 measurements");
    }
    std::vector<Branch> branches(1);
    branches[0].amp.assign(size_t{1} << circuit.width(), 0.0);
    branches[0].amp[0] = 1.0;

    for (const auto& ins : circuit.instructions()) {
        switch (ins.kind) {
            case OpKind::Gate:
                for (auto& branch : branches) apply_gate(branch.amp, ins);
                break;
            case OpKind::Measure: {
                std::vector<Branch> next;
                next.reserve(branches.size() * 2);
                for (auto& branch : branches) {
                    auto [zero, one] = split_on(branch, ins.qubits[0]);
                    if (zero) {
                        zero->bits.push_back(false);
                        next.push_back(std::move(*zero));
                    }
                    if (one) {
                        one->bits.push_back(true);
                        next.push_back(std::move(*one));
                    }
                }
                branches = std::move(next);
                break;
            }
            case OpKind::Reset: {
                // Like an unrecorded measurement whose |1> branch flips back
                // to |0>. On an already-measured register only one branch
                // survives, so this stays cheap.
                std::vector<Branch> next;
                next.reserve(branches.size() * 2);
                for (auto& branch : branches) {
                    auto [zero, one] = split_on(branch, ins.qubits[0]);
                    if (zero) next.push_back(std::move(*zero));
                    if (one) {
                        apply_gate(one->amp,
                                   {0, OpKind::Gate, "X", {ins.qubits[0]}, {}, {}});
                        next.push_back(std::move(*one));
                    }
                }
                branches = std::move(next);
                break;
            }
        }
    }
    OutcomeDistribution dist;
    for (const auto& branch : branches) dist[branch.bits] += branch.weight;
    return dist;
}

double total_variation_distance(const OutcomeDistribution& a,
                                const OutcomeDistribution& b) {
    double sum = 0.0;
    for (const auto& [bits, p] : a) {
        auto it = b.find(bits);
        sum += std::abs(p - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [bits, p] : b) {
        if (!a.count(bits)) sum += p;
    }
    return sum / 2.0;
}

bool assert_equivalent(const Circuit& a, const Circuit& b, double tol,
                       const std::vector<int>& b_measure_to_a) {
    int measures = a.measure_count();
    if (b.measure_count() != measures) {
        throw std::invalid_argument("assert_equivalent: measurement counts differ");
    }
    if (!b_measure_to_a.empty()) {
        if (static_cast<int>(b_measure_to_a.size()) != measures) {
            throw std::invalid_argument("assert_equivalent: bad measurement map");
        }
        std::set<int> targets(b_measure_to_a.begin(), b_measure_to_a.end());
        if (static_cast<int>(targets.size()) != measures || *targets.begin() < 0 ||
            *targets.rbegin() >= measures) {
            throw std::invalid_argument("assert_equivalent: measurement map is not a bijection");
        }
    }
    OutcomeDistribution da = exact_distribution(a);
    OutcomeDistribution db_raw = exact_distribution(b);
    OutcomeDistribution db;
    for (const auto& [bits, p] : db_raw) {
        std::vector<bool> mapped(bits.size());
        for (size_t k = 0; k < bits.size(); ++k) {
            mapped[b_measure_to_a.empty() ? k : b_measure_to_a[k]] = bits[k];
        }
        db[mapped] += p;
    }
    return total_variation_distance(da, db) <= tol;
}

namespace {

/// Joint unitary of up to three qubits as a dense matrix, for the lint below.
std::vector<std::vector<std::complex<double>>> local_unitary(
    const Instruction& ins, const std::vector<int>& support) {
    int bits = static_cast<int>(support.size());
    size_t dim = size_t{1} << bits;
    Instruction local = ins;
    for (int& q : local.qubits) {
        q = static_cast<int>(std::find(support.begin(), support.end(), q) -
                             support.begin());
    }
    std::vector<std::vector<std::complex<double>>> u(dim);
    for (size_t col = 0; col < dim; ++col) {
        Amplitudes amp(dim, 0.0);
        amp[col] = 1.0;
        apply_gate(amp, local);
        u[col] = std::move(amp);
    }
    return u;
}

bool pair_commutes(const Instruction& a, const Instruction& b) {
    std::vector<int> support;
    for (int q : a.qubits) support.push_back(q);
    for (int q : b.qubits) {
        if (std::find(support.begin(), support.end(), q) == support.end()) {
            support.push_back(q);
        }
    }
    std::sort(support.begin(), support.end());
    size_t dim = size_t{1} << support.size();
    auto ua = local_unitary(a, support), ub = local_unitary(b, support);
    for (size_t col = 0; col < dim; ++col) {
        for (size_t row = 0; row < dim; ++row) {
            std::complex<double> ab = 0, ba = 0;
            for (size_t k = 0; k < dim; ++k) {
                ab += ub[col][k] * ua[k][row];
                ba += ua[col][k] * ub[k][row];
            }
            if (std::abs(ab - ba) > 1e-9) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::string> commutation_warnings(const Circuit& circuit) {
    std::vector<std::string> warnings;
    std::map<int, std::vector<int>> groups;
    for (const auto& ins : circuit.instructions()) {
        if (ins.group) groups[*ins.group].push_back(ins.id);
    }
    for (const auto& [tag, members] : groups) {
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = i + 1; j < members.size(); ++j) {
                const auto& a = circuit[members[i]];
                const auto& b = circuit[members[j]];
                bool share = std::any_of(a.qubits.begin(), a.qubits.end(), [&](int q) {
                    return std::find(b.qubits.begin(), b.qubits.end(), q) != b.qubits.end();
                });
                if (share && !pair_commutes(a, b)) {
                    warnings.push_back("group " + std::to_string(tag) + ": instructions " +
                                       std::to_string(a.id) + " and " + std::to_string(b.id) +
                                       " do not commute");
                }
            }
        }
    }
    return warnings;
}

}  // namespace qreuse
