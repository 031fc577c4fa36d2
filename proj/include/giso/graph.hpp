#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "giso/errors.hpp"

namespace giso {

/// Bijection on [0, n). Validates on construction.
class Permutation {
public:
    explicit Permutation(std::vector<int> map);

    static Permutation identity(std::size_t n);
    static Permutation random(std::size_t n, std::uint64_t seed);

    std::size_t size() const { return map_.size(); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& map() const { return map_; }

    Permutation inverse() const;

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> map_;
};

/// Undirected simple graph with a dense symmetric adjacency matrix and
/// zero diagonal. Immutable after construction.
class Graph {
public:
    /// Validates a square boolean matrix: throws AsymmetricMatrix, SelfLoop
    /// or EmptyMatrix. No other normalization happens.
    static Graph from_adjacency(const std::vector<std::vector<bool>>& m,
                                std::string label = "");

    /// Builds from an edge list over [0, order). Duplicates collapse,
    /// self-loops and out-of-range endpoints throw.
    static Graph from_edges(std::size_t order,
                            const std::vector<std::pair<int, int>>& edges,
                            std::string label = "");

    std::size_t order() const { return n_; }
    bool has_edge(int i, int j) const {
        return adj_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)] != 0;
    }
    int degree(int i) const { return static_cast<int>(nbr_[static_cast<std::size_t>(i)].size()); }
    const std::vector<int>& neighbors(int i) const { return nbr_[static_cast<std::size_t>(i)]; }
    std::size_t edge_count() const { return edge_count_; }

    /// All edges as (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const;

    /// Structural equality: order and adjacency (labels ignored).
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    /// Flat row-major adjacency bytes (0/1), n*n entries.
    const std::vector<std::uint8_t>& adjacency_bytes() const { return adj_; }

private:
    Graph(std::size_t n, std::vector<std::uint8_t> adj, std::string label);

    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;       // n*n, row-major
    std::vector<std::vector<int>> nbr_;   // sorted adjacency lists
    std::size_t edge_count_ = 0;
    std::string label_;
};

/// Relabels g by p: result has an edge (p(i), p(j)) exactly where g has (i, j).
/// The result is isomorphic to g with witness p.
Graph permute(const Graph& g, const Permutation& p);

} // namespace giso
