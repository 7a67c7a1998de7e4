#include "qreuse/bench.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qreuse/exact.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/heuristics.hpp"

namespace qreuse {

namespace {

FamilySpec spec_from_json(Family family, const nlohmann::json& params) {
    FamilySpec spec;
    spec.family = family;
    if (params.contains("n")) spec.n = params.at("n").get<int>();
    if (params.contains("l")) spec.l = params.at("l").get<int>();
    if (params.contains("p")) spec.p = params.at("p").get<int>();
    if (params.contains("w")) spec.w = params.at("w").get<int>();
    if (params.contains("d")) spec.d = params.at("d").get<int>();
    if (params.contains("k")) spec.k = params.at("k").get<int>();
    if (params.contains("m")) spec.m = params.at("m").get<int>();
    if (params.contains("seed")) spec.seed = params.at("seed").get<uint64_t>();
    if (params.contains("tagged")) spec.tagged = params.at("tagged").get<bool>();
    if (params.contains("secret")) spec.secret = params.at("secret").get<std::string>();
    if (params.contains("constant")) spec.constant_oracle = params.at("constant").get<bool>();
    return spec;
}

std::string params_string(const nlohmann::json& params) {
    std::string out;
    for (auto it = params.begin(); it != params.end(); ++it) {
        if (!out.empty()) out += ';';
        out += it.key() + "=" + it.value().dump();
    }
    return out;
}

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string bench_csv_header() {
    return std::string(kBenchCsvVersion) +
           "\nid,family,params,n,m,algo,seed,runs,width_out,alpha,"
           "reducibility_factor,depth_in,depth_out,elapsed_ms,optimal,error\n";
}

std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << csv_escape(r.id) << ',' << csv_escape(r.family) << ','
        << csv_escape(r.params) << ',' << r.n << ',' << r.m << ',' << r.algo << ','
        << r.seed << ',' << r.runs << ',' << r.width_out << ',' << r.alpha << ','
        << r.reducibility_factor << ',' << r.depth_in << ',' << r.depth_out << ','
        << r.elapsed_ms << ',' << r.optimal << ',' << csv_escape(r.error) << '\n';
    return out.str();
}

std::vector<BenchRecord> run_bench_suite(const std::string& suite_json,
                                         uint64_t default_seed) {
    nlohmann::json suite;
    try {
        suite = nlohmann::json::parse(suite_json);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed suite: ") + e.what());
    }
    std::vector<BenchRecord> records;
    for (const auto& entry : suite.value("circuits", nlohmann::json::array())) {
        std::string id = entry.at("id").get<std::string>();
        std::string family_label, params_label;
        Circuit circuit;
        std::string load_error;
        try {
            if (entry.contains("file")) {
                std::ifstream in(entry.at("file").get<std::string>());
                if (!in) throw std::runtime_error("cannot open circuit file");
                std::stringstream buffer;
                buffer << in.rdbuf();
                circuit = normalize(parse_circuit(buffer.str()));
                family_label = "file";
                params_label = entry.at("file").get<std::string>();
            } else {
                nlohmann::json params = entry.value("params", nlohmann::json::object());
                Family family = family_from_name(entry.at("family").get<std::string>());
                circuit = generate(spec_from_json(family, params));
                family_label = family_name(family);
                params_label = params_string(params);
            }
        } catch (const std::exception& e) {
            load_error = e.what();
        }

        for (const auto& algo_entry : suite.value("algorithms", nlohmann::json::array())) {
            std::string algo = algo_entry.at("algo").get<std::string>();
            std::vector<uint64_t> seeds =
                algo_entry.contains("seeds")
                    ? algo_entry.at("seeds").get<std::vector<uint64_t>>()
                    : std::vector<uint64_t>{default_seed};
            for (uint64_t seed : seeds) {
                BenchRecord record;
                record.id = id;
                record.family = family_label;
                record.params = params_label;
                record.algo = algo;
                record.seed = seed;
                record.runs = algo_entry.value("runs", algo == "greedy" ? 10 : 1);
                if (!load_error.empty()) {
                    record.error = load_error;
                    records.push_back(std::move(record));
                    continue;
                }
                record.n = circuit.width();
                record.m = circuit.gate_count();
                record.depth_in = depth(circuit);
                try {
                    HeuristicConfig config;
                    config.seed = seed;
                    config.runs = record.runs;
                    config.hierarchy_level = algo_entry.value("level", 0);
                    CompilationResult result;
                    if (algo == "exact") {
                        ExactOptions options;
                        if (algo_entry.contains("budget")) {
                            options.node_budget = algo_entry.at("budget").get<long long>();
                        }
                        result = optimal_compile(circuit, options);
                        record.optimal = result.proven_optimal ? "yes" : "no";
                    } else if (algo == "mrv") {
                        config.swap_roles = algo_entry.value("swap_roles", true);
                        result = mrv_compile(circuit, config);
                    } else if (algo == "greedy") {
                        result = greedy_compile(circuit, config);
                    } else if (algo == "hybrid") {
                        result = hybrid_compile(circuit, config);
                    } else if (algo == "dckf") {
                        result = dckf_compile(circuit);
                    } else if (algo == "dckf-fqs") {
                        result = dckf_first_qubit_search(circuit);
                    } else {
                        throw std::invalid_argument("unknown algorithm: " + algo);
                    }
                    record.width_out = result.compiled_width;
                    record.alpha = result.alpha;
                    record.reducibility_factor = result.reducibility_factor;
                    record.depth_out = depth(result.dynamic_circuit);
                    record.elapsed_ms = result.elapsed.count() * 1000.0;
                } catch (const std::exception& e) {
                    record.error = e.what();
                }
                records.push_back(std::move(record));
            }
        }
    }
    return records;
}

}  // namespace qreuse
