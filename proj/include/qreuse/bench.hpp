#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qreuse/circuit.hpp"

namespace qreuse {

/// One benchmark row: circuit identity, algorithm, and compilation metrics.
struct BenchRecord {
    std::string id;
    std::string family;
    std::string params;
    int n = 0;
    int m = 0;
    std::string algo;
    uint64_t seed = 0;
    int runs = 1;
    int width_out = 0;
    int alpha = 0;
    double reducibility_factor = 0.0;
    int depth_in = 0;
    int depth_out = 0;
    double elapsed_ms = 0.0;
    std::string optimal;  // "yes"/"no" for the exact solver, empty otherwise
    std::string error;
};

/// CSV format version tag carried in the header.
inline constexpr const char* kBenchCsvVersion = "# qreuse-bench-csv v1";

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& record);

/// Run a benchmark suite described by a JSON document:
///   {"circuits": [{"id": "...", "family": "...", "params": {...}} |
///                 {"id": "...", "file": "path"}],
///    "algorithms": [{"algo": "exact|mrv|greedy|hybrid|dckf",
///                    "seeds": [..], "runs": k, "level": L, "budget": b}]}
/// One record per (circuit, algorithm, seed), in suite order; failures land
/// in the record's error column. Deterministic for a fixed suite.
std::vector<BenchRecord> run_bench_suite(const std::string& suite_json,
                                         uint64_t default_seed);

}  // namespace qreuse
