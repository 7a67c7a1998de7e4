#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qreuse/bench.hpp"
#include "qreuse/exact.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/heuristics.hpp"
#include "qreuse/reducibility.hpp"
#include "qreuse/verify.hpp"

namespace {

using namespace qreuse;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

uint64_t env_default_seed() {
    const char* value = std::getenv("QREUSE_SEED");
    return value ? std::strtoull(value, nullptr, 10) : 0;
}

struct CheckArgs {
    std::string input;
    std::string method = "auto";
};

int run_check(const CheckArgs& args) {
    Circuit circuit = normalize(parse_circuit(read_file(args.input)));
    std::string method = args.method;
    if (method == "auto") {
        method = circuit.has_group_tags() ? "dfs" : "matrix";
    }
    auto started = std::chrono::steady_clock::now();
    bool reducible;
    if (method == "dfs") {
        reducible = is_reducible_dfs(circuit);
    } else if (method == "reach") {
        reducible = is_reducible_reachability(circuit);
    } else if (method == "matrix") {
        reducible = is_reducible_matrix(circuit);
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    std::cout << (reducible ? "REDUCIBLE" : "IRREDUCIBLE") << " (method=" << method
              << ", n=" << circuit.width() << ", " << elapsed.count() * 1000.0
              << " ms)\n";
    return reducible ? 0 : 1;
}

struct CompileArgs {
    std::string input, output;
    std::string algo = "greedy";
    uint64_t seed = 0;
    int runs = 10;
    int level = 0;
    long long budget = 10'000'000;
    bool no_swap_roles = false;
};

int run_compile(const CompileArgs& args) {
    Circuit circuit = normalize(parse_circuit(read_file(args.input)));
    for (const auto& warning : commutation_warnings(circuit)) {
        std::cerr << "warning: " << warning << "\n";
    }
    HeuristicConfig config;
    config.seed = args.seed;
    config.runs = args.runs;
    config.swap_roles = !args.no_swap_roles;
    config.hierarchy_level = args.level;

    CompilationResult result;
    if (args.algo == "exact") {
        result = optimal_compile(circuit, {args.budget});
        if (!result.proven_optimal) {
            std::cerr << "warning: node budget exhausted; result may be suboptimal\n";
        }
    } else if (args.algo == "mrv") {
        result = mrv_compile(circuit, config);
    } else if (args.algo == "greedy") {
        result = greedy_compile(circuit, config);
    } else if (args.algo == "hybrid") {
        result = hybrid_compile(circuit, config);
    } else if (args.algo == "dckf") {
        result = dckf_compile(circuit);
    } else if (args.algo == "dckf-fqs") {
        result = dckf_first_qubit_search(circuit);
    } else {
        throw std::invalid_argument("unknown algorithm: " + args.algo);
    }

    std::ostringstream summary;
    summary << "width " << result.original_width << " -> " << result.compiled_width
            << " (r=" << result.reducibility_factor << ", alpha=" << result.alpha;
    if (args.algo == "exact") {
        summary << ", optimal=" << (result.proven_optimal ? "yes" : "no");
    }
    summary << ", " << result.elapsed.count() * 1000.0 << " ms)";
    if (result.alpha == 0) summary << " [no candidate edges]";
    std::cout << summary.str() << "\n";

    std::string document = serialize_circuit(result.dynamic_circuit);
    if (args.output.empty()) {
        std::cout << document;
    } else {
        write_file(args.output, document);
    }
    return 0;
}

struct GenerateArgs {
    std::string family;
    std::string output;
    FamilySpec spec;
};

int run_generate(GenerateArgs& args) {
    args.spec.family = family_from_name(args.family);
    Circuit circuit = generate(args.spec);
    std::string document = serialize_circuit(circuit);
    if (args.output.empty()) {
        std::cout << document;
    } else {
        write_file(args.output, document);
    }
    return 0;
}

struct BenchArgs {
    std::string suite;
    std::string output;
};

int run_bench(const BenchArgs& args) {
    auto records = run_bench_suite(read_file(args.suite), env_default_seed());
    std::string csv = bench_csv_header();
    for (const auto& record : records) csv += bench_csv_row(record);
    if (args.output.empty()) {
        std::cout << csv;
    } else {
        write_file(args.output, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qreuse - dynamic quantum circuit compiler"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "decide whether a circuit is reducible");
    check->add_option("input", check_args.input, "circuit document")->required();
    check->add_option("--method", check_args.method, "dfs|reach|matrix|auto")
        ->default_str("auto");

    CompileArgs compile_args;
    compile_args.seed = env_default_seed();
    auto* compile = app.add_subcommand("compile", "compile a static circuit");
    compile->add_option("input", compile_args.input, "circuit document")->required();
    compile->add_option("--algo", compile_args.algo, "exact|mrv|greedy|hybrid|dckf|dckf-fqs");
    compile->add_option("--seed", compile_args.seed, "random seed");
    compile->add_option("--runs", compile_args.runs, "greedy runs");
    compile->add_option("--level", compile_args.level, "hybrid hierarchy level");
    compile->add_option("--budget", compile_args.budget, "exact-search node budget");
    compile->add_flag("--no-swap-roles", compile_args.no_swap_roles,
                      "single-direction MRV");
    compile->add_option("--out", compile_args.output, "output path");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "emit a benchmark circuit");
    generate->add_option("family", generate_args.family,
                         "dj|bv|simon|qft|linear|circular|pairwise|full|diamond|"
                         "cluster|adder|qaoa|random|iqp")
        ->required();
    generate->add_option("--n", generate_args.spec.n, "width parameter");
    generate->add_option("--l", generate_args.spec.l, "layers");
    generate->add_option("--p", generate_args.spec.p, "QAOA layers");
    generate->add_option("--w", generate_args.spec.w, "cluster rows");
    generate->add_option("--d", generate_args.spec.d, "cluster columns");
    generate->add_option("--k", generate_args.spec.k, "adder bits");
    generate->add_option("--m", generate_args.spec.m, "gate count");
    generate->add_option("--seed", generate_args.spec.seed, "random seed");
    generate->add_option("--secret", generate_args.spec.secret, "BV/Simon secret");
    generate->add_flag("--constant", generate_args.spec.constant_oracle,
                       "DJ constant oracle");
    generate->add_flag("!--no-tags", generate_args.spec.tagged,
                       "strip commutable group tags");
    generate->add_option("--out", generate_args.output, "output path");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run a benchmark suite to CSV");
    bench->add_option("suite", bench_args.suite, "suite JSON")->required();
    bench->add_option("--out", bench_args.output, "CSV output path");

    try {
        app.parse(argc, argv);
        if (check->parsed()) return run_check(check_args);
        if (compile->parsed()) return run_compile(compile_args);
        if (generate->parsed()) return run_generate(generate_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
