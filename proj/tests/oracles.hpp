// Independent reference implementations used only by the tests.
//
// Everything here is written the slow, obvious way on purpose: dense
// matrix products, exhaustive neighborhood scans, BFS. The production
// code must agree with these, not the other way round.

#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "giso/graph.hpp"

namespace oracle {

using Mat32 = std::vector<std::vector<std::uint32_t>>;
using MatWide = std::vector<std::vector<unsigned __int128>>;

inline Mat32 adjacency_u32(const giso::Graph& g) {
    const int n = g.order();
    Mat32 m(n, std::vector<std::uint32_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) m[i][j] = 1;
    return m;
}

// Dense product with every addition reduced mod 2^32 as it happens.
inline Mat32 mul_mod32(const Mat32& a, const Mat32& b) {
    const std::size_t n = a.size();
    Mat32 c(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t aik = a[i][k];
            if (!aik) continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += aik * b[k][j];  // uint32 wraps: this IS the mod
        }
    return c;
}

// M^alpha with mod-2^32 arithmetic throughout.
inline Mat32 walk_matrix_mod32(const giso::Graph& g, int alpha) {
    Mat32 r = adjacency_u32(g);
    const Mat32 m = r;
    for (int a = 1; a < alpha; ++a) r = mul_mod32(r, m);
    return r;
}

// Exact M^alpha in 128-bit integers (no reduction). Only usable while the
// true counts fit in 128 bits, which covers every graph the tests touch.
inline MatWide mul_wide(const MatWide& a, const MatWide& b) {
    const std::size_t n = a.size();
    MatWide c(n, std::vector<unsigned __int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const unsigned __int128 aik = a[i][k];
            if (!aik) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

inline MatWide walk_matrix_exact(const giso::Graph& g, int alpha) {
    const int n = g.order();
    MatWide r(n, std::vector<unsigned __int128>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = g.has_edge(i, j) ? 1 : 0;
    const MatWide m = r;
    for (int a = 1; a < alpha; ++a) r = mul_wide(r, m);
    return r;
}

// Shortest cycle length, or 0 for a forest. BFS from every vertex.
inline int girth(const giso::Graph& g) {
    const int n = g.order();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    const int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline bool connected(const giso::Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

inline std::vector<int> degree_multiset(const giso::Graph& g) {
    std::vector<int> d;
    const int n = static_cast<int>(g.order());
    for (int i = 0; i < n; ++i) d.push_back(g.degree(i));
    std::sort(d.begin(), d.end());
    return d;
}

inline int common_neighbors(const giso::Graph& g, int u, int v) {
    int c = 0;
    const int n = static_cast<int>(g.order());
    for (int w = 0; w < n; ++w)
        if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++c;
    return c;
}

// Checks srg(n, k, lambda, mu) parameters exhaustively.
inline bool is_srg(const giso::Graph& g, int n, int k, int lambda, int mu) {
    if (static_cast<int>(g.order()) != n) return false;
    for (int i = 0; i < n; ++i)
        if (g.degree(i) != k) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int c = common_neighbors(g, u, v);
            if (g.has_edge(u, v) ? c != lambda : c != mu) return false;
        }
    return true;
}

// Induced subgraph on `verts` (order of `verts` fixes the new labels).
inline giso::Graph induced(const giso::Graph& g, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size());
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && g.has_edge(verts[i], verts[j])) adj[i][j] = true;
    return giso::Graph::from_adjacency(adj);
}

// Reference forbidden matrix built straight from the oracle matrices:
// vertices i (in a) and j (in b) stay allowed only while their diagonal
// entries and sorted rows agree at every level 1..alpha.
inline std::vector<std::vector<int>> reference_forbidden(const giso::Graph& a,
                                                         const giso::Graph& b, int alpha) {
    const int n = a.order();
    std::vector<std::vector<int>> f(n, std::vector<int>(n, 0));
    Mat32 ma = adjacency_u32(a), mb = adjacency_u32(b);
    const Mat32 base_a = ma, base_b = mb;
    for (int lvl = 1; lvl <= alpha; ++lvl) {
        if (lvl > 1) {
            ma = mul_mod32(ma, base_a);
            mb = mul_mod32(mb, base_b);
        }
        std::vector<std::vector<std::uint32_t>> rows_a(n), rows_b(n);
        for (int i = 0; i < n; ++i) {
            rows_a[i] = ma[i];
            std::sort(rows_a[i].begin(), rows_a[i].end());
            rows_b[i] = mb[i];
            std::sort(rows_b[i].begin(), rows_b[i].end());
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (ma[i][i] != mb[j][j] || rows_a[i] != rows_b[j]) f[i][j] = 1;
    }
    return f;
}

} // namespace oracle
