#include "giso/extension.hpp"

namespace giso {

PathCountMatrix PathCountMatrix::initial(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> e(n * n, 0);
    const auto& adj = g.adjacency_bytes();
    for (std::size_t k = 0; k < n * n; ++k) e[k] = adj[k];
    return PathCountMatrix(1, n, std::move(e));
}

PathCountMatrix extend_step(const Graph& g, const PathCountMatrix& prev) {
    const std::size_t n = g.order();
    if (n != prev.order())
        throw DimensionMismatch("adjacency order " + std::to_string(n) +
                                " != matrix order " + std::to_string(prev.order()));
    std::vector<std::uint32_t> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t* out = next.data() + i * n;
        for (int j : g.neighbors(static_cast<int>(i))) {
            const std::uint32_t* in = prev.e_.data() + static_cast<std::size_t>(j) * n;
            for (std::size_t k = 0; k < n; ++k) out[k] += in[k];  // wraps mod 2^32
        }
    }
    return PathCountMatrix(prev.level() + 1, n, std::move(next));
}

std::vector<PathCountMatrix> extend_sequence(const Graph& g, int alpha_max) {
    if (alpha_max < 1) throw InvalidParams("alpha_max must be >= 1");
    std::vector<PathCountMatrix> levels;
    levels.reserve(static_cast<std::size_t>(alpha_max));
    levels.push_back(PathCountMatrix::initial(g));
    for (int a = 1; a < alpha_max; ++a) levels.push_back(extend_step(g, levels.back()));
    return levels;
}

ExtendedGraph extended_graph(const PathCountMatrix& m) {
    ExtendedGraph out;
    out.order = m.order();
    out.level = m.level();
    const int n = static_cast<int>(m.order());
    out.diagonal.resize(m.order());
    for (int i = 0; i < n; ++i) {
        out.diagonal[static_cast<std::size_t>(i)] = m.at(i, i);
        for (int j = i + 1; j < n; ++j)
            if (const std::uint32_t w = m.at(i, j); w != 0)
                out.edges.push_back({i, j, w});
    }
    return out;
}

} // namespace giso
