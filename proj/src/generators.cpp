#include "qreuse/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace qreuse {

namespace {

constexpr double kPi = std::numbers::pi;

// Deterministic non-trivial rotation angle for dressing gates.
double angle_for(int index) {
    double frac = std::fmod(0.6180339887498949 * (index + 1), 1.0);
    return 2.0 * kPi * frac;
}

struct Builder {
    std::vector<Instruction> instructions;
    int next_angle = 0;

    void gate(std::string name, std::vector<int> qubits,
              std::optional<double> param = std::nullopt,
              std::optional<int> group = std::nullopt) {
        instructions.push_back(
            {0, OpKind::Gate, std::move(name), std::move(qubits), param, group});
    }
    void rotation(std::string name, int qubit) {
        gate(std::move(name), {qubit}, angle_for(next_angle++));
    }
};

std::string default_secret(int n) { return std::string(n, '1'); }

void check_secret(const std::string& secret, int n) {
    if (static_cast<int>(secret.size()) != n ||
        secret.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("secret must be a binary string of length n");
    }
}

Circuit finish(int width, Builder& b, bool keep_singles) {
    std::vector<Instruction> instructions;
    for (auto& ins : b.instructions) {
        if (!keep_singles && ins.qubits.size() == 1) continue;
        instructions.push_back(std::move(ins));
    }
    return normalize(Circuit(width, std::move(instructions)));
}

Circuit generate_dj_bv(const FamilySpec& spec) {
    int n = spec.n;
    if (n < 2) throw std::invalid_argument("DJ/BV need n >= 2");
    std::string secret;
    if (spec.family == Family::DJ) {
        secret = spec.constant_oracle ? std::string(n, '0') : default_secret(n);
    } else {
        secret = spec.secret.empty() ? default_secret(n) : spec.secret;
        check_secret(secret, n);
    }
    Builder b;
    b.gate("X", {n});
    for (int q = 0; q <= n; ++q) b.gate("H", {q});
    for (int i = 0; i < n; ++i) {
        if (secret[i] == '1') b.gate("CX", {i, n});
    }
    for (int q = 0; q < n; ++q) b.gate("H", {q});
    return finish(n + 1, b, spec.include_single_qubit_gates);
}

Circuit generate_simon(const FamilySpec& spec) {
    int n = spec.n;
    if (n < 2) throw std::invalid_argument("Simon needs n >= 2");
    std::string secret = spec.secret.empty() ? default_secret(n) : spec.secret;
    check_secret(secret, n);
    size_t j = secret.find('1');
    if (j == std::string::npos) {
        throw std::invalid_argument("Simon needs a nonzero secret");
    }
    Builder b;
    for (int q = 0; q < n; ++q) b.gate("H", {q});
    for (int i = 0; i < n; ++i) b.gate("CX", {i, n + i});
    for (int k = 0; k < n; ++k) {
        if (secret[k] == '1') b.gate("CX", {static_cast<int>(j), n + k});
    }
    for (int q = 0; q < n; ++q) b.gate("H", {q});
    return finish(2 * n, b, spec.include_single_qubit_gates);
}

Circuit generate_qft(const FamilySpec& spec) {
    int n = spec.n;
    if (n < 2) throw std::invalid_argument("QFT needs n >= 2");
    Builder b;
    for (int j = 0; j < n; ++j) {
        b.gate("H", {j});
        for (int k = 2; k <= n - j; ++k) {
            b.gate("CP", {j + k - 1, j}, 2.0 * kPi / std::pow(2.0, k));
        }
    }
    for (int i = 0; i < n / 2; ++i) b.gate("SWAP", {i, n - 1 - i});
    return finish(n, b, spec.include_single_qubit_gates);
}

Circuit generate_entangled(const FamilySpec& spec) {
    int n = spec.n, l = spec.l;
    if (n < 2 || l < 1) throw std::invalid_argument("entangled layers need n >= 2, l >= 1");
    Builder b;
    auto rotate_all = [&b, n]() {
        for (int q = 0; q < n; ++q) b.rotation("RY", q);
    };
    for (int layer = 0; layer < l; ++layer) {
        rotate_all();
        switch (spec.family) {
            case Family::Linear:
                for (int i = 0; i + 1 < n; ++i) b.gate("CX", {i, i + 1});
                break;
            case Family::Circular:
                for (int i = 0; i + 1 < n; ++i) b.gate("CX", {i, i + 1});
                b.gate("CX", {n - 1, 0});
                break;
            case Family::Pairwise:
                for (int i = 0; i + 1 < n; i += 2) b.gate("CX", {i, i + 1});
                for (int i = 1; i + 1 < n; i += 2) b.gate("CX", {i, i + 1});
                break;
            case Family::Full:
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) b.gate("CX", {i, j});
                }
                break;
            default:
                throw std::logic_error("not an entanglement family");
        }
    }
    rotate_all();
    return finish(n, b, spec.include_single_qubit_gates);
}

Circuit generate_diamond(const FamilySpec& spec) {
    int total = spec.n;
    if (total < 4 || total % 2 != 0) {
        throw std::invalid_argument("diamond needs an even total width >= 4");
    }
    int half = total / 2;
    Builder b;
    for (int q = 0; q < half; ++q) b.gate("X", {q});
    // Two-qubit rotation boxes arranged in a diamond; each box is an
    // entangling rotation CX (RY on the first wire) CX.
    for (int layer = 1; layer < 2 * half; ++layer) {
        int width = half - std::abs(layer - half);
        for (int j = 0; j < width; ++j) {
            int a = half - width + 2 * j;
            b.gate("CX", {a, a + 1});
            b.rotation("RY", a);
            b.gate("CX", {a, a + 1});
        }
    }
    return finish(total, b, spec.include_single_qubit_gates);
}

Circuit generate_cluster(const FamilySpec& spec) {
    int w = spec.w, d = spec.d;
    if (w < 1 || d < 1) throw std::invalid_argument("cluster needs w >= 1 and d >= 1");
    Builder b;
    for (int q = 0; q < w * d; ++q) b.gate("H", {q});
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r + 1 < w; ++r) b.gate("CZ", {c * w + r, c * w + r + 1});
        if (c + 1 < d) {
            for (int r = 0; r < w; ++r) b.gate("CZ", {c * w + r, (c + 1) * w + r});
        }
    }
    return finish(w * d, b, spec.include_single_qubit_gates);
}

Circuit generate_adder(const FamilySpec& spec) {
    int k = spec.k;
    if (k < 1) throw std::invalid_argument("adder needs k >= 1");
    if (spec.n != 0 && spec.n != 3 * k + 1) {
        throw std::invalid_argument("adder width must be 3k + 1");
    }
    Builder b;
    // Ripple blocks over (carry, a, b, carry'): the a-wire retires first,
    // then the incoming carry folds into the sum and next carry.
    for (int m = 0; m < k; ++m) {
        int c = 3 * m, a = 3 * m + 1, s = 3 * m + 2, c2 = 3 * m + 3;
        b.gate("CCX", {a, s, c2});
        b.gate("CX", {a, s});
        b.gate("CCX", {c, s, c2});
        b.gate("CX", {c, s});
    }
    return finish(3 * k + 1, b, spec.include_single_qubit_gates);
}

std::vector<std::pair<int, int>> random_u3r_graph(int n, std::mt19937_64& rng) {
    // Pairing-model sampler with rejection of self-loops and multi-edges.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
        for (size_t i = stubs.size(); i > 1; --i) {
            std::swap(stubs[i - 1], stubs[rng() % i]);
        }
        std::set<std::pair<int, int>> edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            if (u > v) std::swap(u, v);
            ok = ok && edges.emplace(u, v).second;
        }
        if (ok) return {edges.begin(), edges.end()};
    }
    throw std::runtime_error("failed to sample a three-regular graph");
}

Circuit generate_qaoa(const FamilySpec& spec) {
    int n = spec.n, p = spec.p;
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("QAOA max-cut needs even n >= 4");
    if (p < 1) throw std::invalid_argument("QAOA needs p >= 1");
    std::mt19937_64 rng(spec.seed);
    auto edges = random_u3r_graph(n, rng);
    Builder b;
    for (int q = 0; q < n; ++q) b.gate("H", {q});
    for (int layer = 0; layer < p; ++layer) {
        double gamma = angle_for(b.next_angle++);
        for (auto [u, v] : edges) {
            b.gate("RZZ", {u, v}, gamma, spec.tagged ? std::optional<int>(layer) : std::nullopt);
        }
        double beta = angle_for(b.next_angle++);
        for (int q = 0; q < n; ++q) b.gate("RX", {q}, beta);
    }
    return finish(n, b, spec.include_single_qubit_gates);
}

Circuit generate_random(const FamilySpec& spec) {
    int n = spec.n, m = spec.m;
    if (n < 2 || m < 0) throw std::invalid_argument("random circuit needs n >= 2, m >= 0");
    std::mt19937_64 rng(spec.seed);
    Builder b;
    for (int i = 0; i < m; ++i) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % (n - 1));
        if (v >= u) ++v;
        b.gate("CX", {u, v});
    }
    return finish(n, b, true);
}

Circuit generate_random_iqp(const FamilySpec& spec) {
    int n = spec.n, m = spec.m;
    if (n < 2 || m < 0) throw std::invalid_argument("IQP circuit needs n >= 2, m >= 0");
    std::mt19937_64 rng(spec.seed);
    Builder b;
    for (int q = 0; q < n; ++q) b.gate("H", {q});
    for (int i = 0; i < m; ++i) {
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % (n - 1));
        if (v >= u) ++v;
        // sqrt(CZ) members of the diagonal block; one commutable group.
        b.gate("CP", {u, v}, kPi / 2.0, spec.tagged ? std::optional<int>(0) : std::nullopt);
    }
    for (int q = 0; q < n; ++q) b.gate("H", {q});
    return finish(n, b, spec.include_single_qubit_gates);
}

}  // namespace

Family family_from_name(const std::string& name) {
    if (name == "dj") return Family::DJ;
    if (name == "bv") return Family::BV;
    if (name == "simon") return Family::Simon;
    if (name == "qft") return Family::QFT;
    if (name == "linear") return Family::Linear;
    if (name == "circular") return Family::Circular;
    if (name == "pairwise") return Family::Pairwise;
    if (name == "full") return Family::Full;
    if (name == "diamond") return Family::Diamond;
    if (name == "cluster") return Family::Cluster;
    if (name == "adder") return Family::Adder;
    if (name == "qaoa") return Family::QaoaMaxcut;
    if (name == "random") return Family::Random;
    if (name == "iqp") return Family::RandomIqp;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family family) {
    switch (family) {
        case Family::DJ: return "dj";
        case Family::BV: return "bv";
        case Family::Simon: return "simon";
        case Family::QFT: return "qft";
        case Family::Linear: return "linear";
        case Family::Circular: return "circular";
        case Family::Pairwise: return "pairwise";
        case Family::Full: return "full";
        case Family::Diamond: return "diamond";
        case Family::Cluster: return "cluster";
        case Family::Adder: return "adder";
        case Family::QaoaMaxcut: return "qaoa";
        case Family::Random: return "random";
        case Family::RandomIqp: return "iqp";
    }
    throw std::logic_error("unreachable");
}

Circuit generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::DJ:
        case Family::BV: return generate_dj_bv(spec);
        case Family::Simon: return generate_simon(spec);
        case Family::QFT: return generate_qft(spec);
        case Family::Linear:
        case Family::Circular:
        case Family::Pairwise:
        case Family::Full: return generate_entangled(spec);
        case Family::Diamond: return generate_diamond(spec);
        case Family::Cluster: return generate_cluster(spec);
        case Family::Adder: return generate_adder(spec);
        case Family::QaoaMaxcut: return generate_qaoa(spec);
        case Family::Random: return generate_random(spec);
        case Family::RandomIqp: return generate_random_iqp(spec);
    }
    throw std::logic_error("unreachable");
}

BoolMatrix expected_biadjacency(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::DJ:
        case Family::BV: {
            int n = spec.n;
            std::string secret;
            if (spec.family == Family::DJ) {
                secret = spec.constant_oracle ? std::string(n, '0') : default_secret(n);
            } else {
                secret = spec.secret.empty() ? default_secret(n) : spec.secret;
                check_secret(secret, n);
            }
            BoolMatrix b = BoolMatrix::identity(n + 1);
            std::vector<int> ones;
            for (int i = 0; i < n; ++i) {
                if (secret[i] == '1') ones.push_back(i);
            }
            for (int i : ones) {
                for (int j : ones) {
                    if (j >= i) b.set(i, j, true);
                }
                b.set(i, n, true);
                b.set(n, i, true);
            }
            return b;
        }
        case Family::Simon: {
            int n = spec.n;
            BoolMatrix b(2 * n);
            for (int block = 0; block < 2; ++block) {
                for (int i = 0; i < n; ++i) {
                    b.set(block * n + i, i, true);
                    b.set(block * n + i, 0, true);
                    for (int j = i; j < n; ++j) b.set(block * n + i, n + j, true);
                }
            }
            return b;
        }
        case Family::QFT:
            return BoolMatrix::ones(spec.n);
        case Family::Linear: {
            int n = spec.n, l = spec.l;
            BoolMatrix b(n);
            for (int i = 0; i < n; ++i) {
                for (int j = std::max(i - l, 0); j < n; ++j) b.set(i, j, true);
            }
            return b;
        }
        case Family::Circular: {
            int n = spec.n;
            if (spec.l >= 2 || n <= 3) return BoolMatrix::ones(n);
            BoolMatrix b(n);
            for (int i = 0; i < n; ++i) {
                for (int j = std::max(i - 2, 0); j < n; ++j) b.set(i, (j + 1) % n, true);
            }
            return b;
        }
        case Family::Pairwise: {
            int n = spec.n, l = spec.l;
            BoolMatrix b(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (std::abs(i - j) <= 2 * l - 1) b.set(i, j, true);
                }
            }
            for (int i = 0; i + 2 * l < n; i += 2) b.set(i, i + 2 * l, true);
            for (int i = 1; i + 2 * l < n; i += 2) b.set(i + 2 * l, i, true);
            return b;
        }
        case Family::Full:
            return BoolMatrix::ones(spec.n);
        case Family::Diamond: {
            int half = spec.n / 2;
            BoolMatrix b(spec.n);
            for (int i = 0; i < half; ++i) {
                for (int j = 0; j <= i + half; ++j) b.set(i, j, true);
            }
            for (int i = half; i < 2 * half; ++i) {
                for (int j = i - half; j < 2 * half; ++j) b.set(i, j, true);
            }
            return b;
        }
        case Family::Cluster: {
            int w = spec.w, d = spec.d;
            BoolMatrix b(w * d);
            for (int i = 1; i < d; ++i) {
                for (int r = 0; r < w; ++r) b.set(i * w + r, (i - 1) * w + r, true);
            }
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d - i; ++j) {
                    for (int a = 0; a < w; ++a) {
                        for (int bb = std::max(a - j - 1, 0); bb < w; ++bb) {
                            b.set(i * w + a, (i + j) * w + bb, true);
                        }
                    }
                }
            }
            return b;
        }
        case Family::Adder: {
            int k = spec.k, n = 3 * k + 1;
            BoolMatrix b(n);
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < n; ++j) b.set(i, j, true);
            }
            for (int m = 1; m < k; ++m) {
                for (int i = 3 * m + 1; i <= 3 * m + 3; ++i) {
                    for (int j = 3 * m; j < n; ++j) b.set(i, j, true);
                }
            }
            for (int j = 0; j < k; ++j) {
                for (int i = 0; i <= 3 * j; ++i) b.set(i, 3 * j + 1, false);
            }
            return b;
        }
        default:
            throw std::invalid_argument("no closed-form biadjacency for family " +
                                        family_name(spec.family));
    }
}

int expected_optimal_width(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::DJ:
            return spec.constant_oracle ? 1 : 2;
        case Family::BV: {
            std::string secret = spec.secret.empty() ? default_secret(spec.n) : spec.secret;
            return secret.find('1') == std::string::npos ? 1 : 2;
        }
        case Family::Simon: return 3;
        case Family::QFT: return spec.n;
        case Family::Linear: return spec.l <= spec.n - 2 ? spec.l + 1 : spec.n;
        case Family::Circular: return (spec.n >= 4 && spec.l == 1) ? 3 : spec.n;
        case Family::Pairwise:
            return spec.l <= (spec.n + 1) / 2 - 1 ? 2 * spec.l + 1 : spec.n;
        case Family::Full: return spec.n;
        case Family::Diamond: return spec.n / 2 + 1;
        case Family::Cluster:
            if (spec.d < 2) {
                throw std::invalid_argument("cluster optimal width is published for d >= 2");
            }
            return spec.w + 1;
        case Family::Adder: return spec.k == 1 ? 3 : 4;
        default:
            throw std::invalid_argument("no published optimal width for family " +
                                        family_name(spec.family));
    }
}

}  // namespace qreuse
