#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "giso/graph.hpp"

namespace giso {

enum class GraphFormat { Graph6, Dimacs, EdgeList };

std::string to_string(GraphFormat f);

/// "graph6" | "dimacs" | "edgelist" (case-sensitive).
GraphFormat format_from_name(std::string_view name);

/// graph6: one line of printable characters in [63, 126]; size field in the
/// 1-, 4- or 8-byte form, then the upper triangle packed 6 bits per
/// character, column-major over pairs (i, j) with i < j. An optional
/// ">>graph6<<" prefix and one trailing newline are accepted. The payload
/// length must be exactly ceil(n(n-1)/2 / 6) characters and padding bits
/// must be zero; anything else is rejected.
Graph parse_graph6(std::string_view bytes, std::size_t max_order = 5000);

/// DIMACS edge format: "c" comment lines, one "p edge <n> <m>" header, then
/// "e <u> <v>" lines with 1-indexed endpoints. Duplicate edges collapse.
Graph parse_dimacs(std::string_view text);

/// Plain edge list: one "u v" pair per line, 0-indexed, '#' starts a
/// comment. The directive "# order <n>" pins the graph order so isolated
/// trailing vertices survive a round-trip; without it the order is
/// max vertex id + 1.
Graph parse_edge_list(std::string_view text);

Graph parse_graph(std::string_view bytes, GraphFormat format);

/// Canonical serialization; every writer output reparses to an identical
/// adjacency matrix. Lines end with a single line feed.
std::string write_graph(const Graph& g, GraphFormat format);

struct GraphDocument {
    Graph graph;
    GraphFormat format;
    std::string name;
};

/// Reads a file ("-" = stdin). The format is taken from `format` if given,
/// else guessed from the extension (.g6 / .dimacs,.col,.clq / .el,.edges),
/// else sniffed from the content.
GraphDocument load_graph_file(const std::string& path,
                              std::optional<GraphFormat> format = std::nullopt);

} // namespace giso
