#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "giso/graph.hpp"

namespace giso {

// Graph family generators. Vertex numbering is fixed and documented per
// family so generated graphs are byte-for-byte reproducible.

/// Cycle C_n, n >= 3; vertex i adjacent to (i+1) mod n.
Graph cycle(int n);

/// Path P_n, n >= 1; vertex i adjacent to i+1.
Graph path(int n);

/// Complete graph K_n, n >= 1.
Graph complete(int n);

/// Petersen graph: outer cycle 0..4, spokes i -- i+5,
/// inner vertices 5..9 with 5+i -- 5+((i+2) mod 5).
Graph petersen();

/// Circulant graph on n vertices: i adjacent to j iff (i-j) mod n is in the
/// connection set (closed under negation automatically). Offsets must be in
/// [1, n-1]; an offset of 0 (mod n) is rejected.
Graph circulant(int n, const std::vector<int>& connections);

/// k x k rook's graph: vertex = k*row + column; two cells are adjacent iff
/// they share a row or a column. rook(4) is SRG(16, 6, 2, 2).
Graph rook(int k);

/// Shrikhande graph as the Cayley graph on Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}; vertex = 4*a + b. SRG(16, 6, 2, 2), same
/// parameters as rook(4) but not isomorphic to it.
Graph shrikhande();

/// Disjoint union; part k's vertices are offset by the total order of
/// parts 0..k-1.
Graph disjoint_union(const std::vector<Graph>& parts);

/// Erdos-Renyi G(n, p): each pair (i, j), i < j, drawn in lexicographic
/// order from mt19937_64(seed). Reproducible from the seed.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// Random d-regular graph via the pairing model: d stubs per vertex,
/// shuffled and paired; any loop or duplicate edge restarts the whole
/// pairing. Requires n*d even and 0 <= d < n.
Graph random_regular(int n, int degree, std::uint64_t seed);

/// Parses a family spec string and generates the graph. Grammar:
///   cycle(n) | path(n) | complete(n) | petersen | shrikhande | rook(k)
///   | circulant(n,o1,o2,...) | union(spec,spec,...)
///   | random(n,p[,seed]) | random-regular(n,d[,seed])
/// Omitted seeds default to 0. Throws InvalidParams on anything else.
Graph generate(const std::string& family_spec);

} // namespace giso
