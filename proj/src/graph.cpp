#include "giso/graph.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace giso {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    const std::size_t n = map_.size();
    std::vector<std::uint8_t> seen(n, 0);
    for (int v : map_) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw InvalidParams("permutation entry out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw InvalidParams("permutation entry repeated");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
    return Permutation(std::move(m));
}

Permutation Permutation::random(std::size_t n, std::uint64_t seed) {
    std::vector<int> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
    // Fisher-Yates with rejection-sampled bounded draws so the result only
    // depends on the (fully specified) mt19937_64 stream.
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::uint64_t bound = i;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t r;
        do { r = rng(); } while (r >= limit);
        std::swap(m[i - 1], m[static_cast<std::size_t>(r % bound)]);
    }
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Graph::Graph(std::size_t n, std::vector<std::uint8_t> adj, std::string label)
    : n_(n), adj_(std::move(adj)), label_(std::move(label)) {
    nbr_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (adj_[i * n_ + j]) nbr_[i].push_back(static_cast<int>(j));
        }
        edge_count_ += nbr_[i].size();
    }
    edge_count_ /= 2;
}

Graph Graph::from_adjacency(const std::vector<std::vector<bool>>& m, std::string label) {
    const std::size_t n = m.size();
    if (n == 0) throw EmptyMatrix("adjacency matrix has order 0");
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("adjacency matrix is not square");
    std::vector<std::uint8_t> adj(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i]) throw SelfLoop("nonzero diagonal at vertex " + std::to_string(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[i][j] != m[j][i])
                throw AsymmetricMatrix("entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") is not symmetric");
            adj[i * n + j] = adj[j * n + i] = m[i][j] ? 1 : 0;
        }
    }
    return Graph(n, std::move(adj), std::move(label));
}

Graph Graph::from_edges(std::size_t order, const std::vector<std::pair<int, int>>& edges,
                        std::string label) {
    if (order == 0) throw EmptyMatrix("graph order must be at least 1");
    std::vector<std::uint8_t> adj(order * order, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= order ||
            static_cast<std::size_t>(v) >= order)
            throw IndexOutOfRange("edge endpoint out of range");
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        adj[static_cast<std::size_t>(u) * order + static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v) * order + static_cast<std::size_t>(u)] = 1;
    }
    return Graph(order, std::move(adj), std::move(label));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < n_; ++i)
        for (int j : nbr_[i])
            if (static_cast<std::size_t>(j) > i) out.emplace_back(static_cast<int>(i), j);
    return out;
}

Graph Graph::with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
}

Graph permute(const Graph& g, const Permutation& p) {
    if (p.size() != g.order())
        throw LengthMismatch("permutation length " + std::to_string(p.size()) +
                             " != graph order " + std::to_string(g.order()));
    const std::size_t n = g.order();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [i, j] : g.edges()) edges.emplace_back(p(i), p(j));
    return Graph::from_edges(n, edges, g.label());
}

} // namespace giso
