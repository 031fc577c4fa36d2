#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "giso/graph.hpp"

namespace giso {

// Iterated walk-count matrices. Level alpha holds, at entry (i, j), the
// number of walks with alpha edges from i to j, with every addition wrapping
// mod 2^32 (plain uint32 arithmetic). Note these are walk counts, not simple
// path counts: vertices and edges may repeat along a walk. Level 1 is the
// adjacency matrix itself.
class PathCountMatrix {
public:
    /// Level-1 matrix: the adjacency matrix of g as 0/1 counts.
    static PathCountMatrix initial(const Graph& g);

    int level() const { return level_; }
    std::size_t order() const { return n_; }

    std::uint32_t at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    }
    std::span<const std::uint32_t> row(int i) const {
        return {e_.data() + static_cast<std::size_t>(i) * n_, n_};
    }

    bool operator==(const PathCountMatrix& other) const = default;

private:
    PathCountMatrix(int level, std::size_t n, std::vector<std::uint32_t> e)
        : level_(level), n_(n), e_(std::move(e)) {}

    int level_ = 1;
    std::size_t n_ = 0;
    std::vector<std::uint32_t> e_;  // n*n, row-major, symmetric

    friend PathCountMatrix extend_step(const Graph&, const PathCountMatrix&);
};

/// One extension step: level alpha -> alpha+1. Row i of the result is the
/// wrap-around sum of the previous rows of i's neighbors, i.e. the adjacency
/// product computed edge-wise in O(|E| * n). Inputs are not modified.
PathCountMatrix extend_step(const Graph& g, const PathCountMatrix& prev);

/// Levels 1..alpha_max, in order. alpha_max >= 1.
std::vector<PathCountMatrix> extend_sequence(const Graph& g, int alpha_max);

struct WeightedEdge {
    int u = 0, v = 0;
    std::uint32_t weight = 0;
    bool operator==(const WeightedEdge&) const = default;
};

// Weighted view of one level: every nonzero off-diagonal entry (i < j)
// becomes an edge carrying its count verbatim. Diagonal entries (closed-walk
// counts) are kept as a separate vector rather than as self-loops, since the
// source graphs are simple.
struct ExtendedGraph {
    std::size_t order = 0;
    int level = 1;
    std::vector<WeightedEdge> edges;        // u < v, lexicographic
    std::vector<std::uint32_t> diagonal;    // closed-walk counts per vertex
};

ExtendedGraph extended_graph(const PathCountMatrix& m);

} // namespace giso
