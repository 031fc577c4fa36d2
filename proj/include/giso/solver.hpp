#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "giso/compatibility.hpp"
#include "giso/graph.hpp"

namespace giso {

struct SolveConfig {
    int alpha_max = 0;                       // 0 = graph order
    int stall = 2;
    std::uint64_t node_budget = 10'000'000;  // backtracking placements
    bool use_forbidden = true;               // false = naive baseline
    RowMatch row_match = RowMatch::Multiset;
};

struct SolveStats {
    int levels = 0;                          // extension levels computed
    double f_density = 0.0;
    double unique_candidate_fraction = 0.0;
    std::uint64_t nodes = 0;                 // accepted partial assignments
    double extension_ms = 0.0;
    double search_ms = 0.0;
};

enum class Verdict { Isomorphic, NonIsomorphic, Exhausted };

std::string to_string(Verdict v);

struct SolveVerdict {
    Verdict verdict = Verdict::NonIsomorphic;
    std::optional<Permutation> mapping;      // present iff Isomorphic; passes verify
    SolveStats stats;
};

/// Edge-iff check in both directions: h is an isomorphism from g to g_prime
/// iff every pair (i, j) is an edge in g exactly when (h(i), h(j)) is one in
/// g_prime.
bool verify(const Graph& g, const Graph& g_prime, const Permutation& h);

/// Two-stage decision: build F and screen for infeasibility, then run a
/// depth-first backtracking search over assignments that respect F and the
/// adjacency of every previously mapped vertex. Vertices are ordered
/// most-constrained first by F row candidate count, ties by index. All
/// outcomes are verdicts; nothing throws.
SolveVerdict solve(const Graph& g, const Graph& g_prime, const SolveConfig& config = {});

/// Correctness oracle: tries all n! bijections in lexicographic order and
/// returns the first one that verifies. Never Exhausted. Guarded by
/// max_order (factorial blowup).
SolveVerdict brute_force(const Graph& g, const Graph& g_prime, int max_order = 10);

} // namespace giso
