#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "giso/solver.hpp"

namespace giso {

/// One measured instance. Every empirical claim the toolkit cares about is
/// a column here: F saturation (f_density), near-unique candidate rows
/// (unique_candidate_fraction), search effort (nodes) and the stage split
/// (extension_ms vs search_ms). nodes_baseline is filled when the instance
/// was re-run with the F prefilter disabled.
struct BenchRecord {
    std::string family;
    int n = 0;
    int alpha_reached = 0;
    double f_density = 0.0;
    double unique_candidate_fraction = 0.0;
    std::string verdict;
    std::uint64_t nodes = 0;
    double extension_ms = 0.0;
    double search_ms = 0.0;
    std::optional<std::uint64_t> nodes_baseline;
};

struct BenchOptions {
    /// Family specs; "N" is replaced by each size, "S" by each seed.
    std::vector<std::string> families;
    std::vector<int> sizes = {16, 50, 100};
    std::vector<std::uint64_t> seeds = {1, 2, 3};
    /// Explicit two-graph instances, run once each.
    std::vector<std::pair<std::string, std::string>> pairs;
    SolveConfig config;
    bool baseline = false;  // also run with use_forbidden = false
    bool distinct = false;  // second graph = same family, reseeded (needs "S")
};

std::vector<std::string> default_bench_families();
std::vector<std::pair<std::string, std::string>> default_bench_pairs();

/// Runs every instance: each family x size x seed solves the generated graph
/// against a seed-permuted copy (or a reseeded distinct instance), then every
/// explicit pair. Records come back in deterministic instance order.
std::vector<BenchRecord> run_bench(const BenchOptions& opt);

/// RFC 4180 CSV with a fixed header row.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace giso
