#include "giso/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace giso {

namespace {

constexpr std::string_view k_g6_header = ">>graph6<<";

std::size_t g6_payload_chars(std::size_t n) {
    return (n * (n - 1) / 2 + 5) / 6;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in{std::string(line)};
    while (in >> tok) out.push_back(tok);
    return out;
}

long parse_long(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw MalformedHeader(std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw MalformedHeader(std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

} // namespace

std::string to_string(GraphFormat f) {
    switch (f) {
        case GraphFormat::Graph6: return "graph6";
        case GraphFormat::Dimacs: return "dimacs";
        case GraphFormat::EdgeList: return "edgelist";
    }
    return "unknown";
}

GraphFormat format_from_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "dimacs") return GraphFormat::Dimacs;
    if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
    throw InvalidParams("unknown format '" + std::string(name) + "'");
}

Graph parse_graph6(std::string_view bytes, std::size_t max_order) {
    std::string_view in = bytes;
    if (in.substr(0, k_g6_header.size()) == k_g6_header) in.remove_prefix(k_g6_header.size());
    if (!in.empty() && in.back() == '\n') in.remove_suffix(1);
    if (!in.empty() && in.back() == '\r') in.remove_suffix(1);
    if (in.empty()) throw TruncatedBits("empty graph6 input");
    for (std::size_t k = 0; k < in.size(); ++k) {
        const unsigned char c = static_cast<unsigned char>(in[k]);
        if (c < 63 || c > 126)
            throw InvalidChar("byte " + std::to_string(c) + " at position " +
                              std::to_string(k) + " outside [63, 126]");
    }
    auto val = [&](std::size_t k) {
        return static_cast<std::uint64_t>(static_cast<unsigned char>(in[k])) - 63;
    };

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (val(0) != 63) {
        n = val(0);
        pos = 1;
    } else if (in.size() >= 2 && val(1) != 63) {
        if (in.size() < 4) throw TruncatedBits("graph6 size field cut short");
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        if (in.size() < 8) throw TruncatedBits("graph6 size field cut short");
        for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | val(k);
        pos = 8;
    }
    if (n == 0) throw EmptyMatrix("graph6 input encodes the order-0 graph");
    if (n > max_order)
        throw OversizeOrder("graph6 order " + std::to_string(n) + " exceeds limit " +
                            std::to_string(max_order));

    const std::size_t need = g6_payload_chars(n);
    const std::size_t have = in.size() - pos;
    if (have < need)
        throw TruncatedBits("graph6 payload has " + std::to_string(have) +
                            " characters, needs " + std::to_string(need));
    if (have > need)
        throw TrailingData("graph6 payload has " + std::to_string(have - need) +
                           " extra characters");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++bit) {
            const std::uint64_t v = val(pos + bit / 6);
            if ((v >> (5 - bit % 6)) & 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    // trailing padding bits in the last character must be zero
    for (; bit < need * 6; ++bit)
        if ((val(pos + bit / 6) >> (5 - bit % 6)) & 1)
            throw TrailingData("nonzero graph6 padding bits");

    return Graph::from_edges(n, edges);
}

Graph parse_dimacs(std::string_view text) {
    bool have_header = false;
    long n = 0;
    std::vector<std::pair<int, int>> edges;
    for (std::string_view line : split_lines(text)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw MalformedHeader("duplicate 'p' line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw MalformedHeader("expected 'p edge <n> <m>', got '" + std::string(line) + "'");
            n = parse_long(toks[2], "vertex count");
            parse_long(toks[3], "edge count");
            if (n < 1) throw MalformedHeader("vertex count must be >= 1");
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) throw MalformedHeader("'e' line before 'p edge' header");
            if (toks.size() != 3)
                throw MalformedHeader("expected 'e <u> <v>', got '" + std::string(line) + "'");
            const long u = parse_long(toks[1], "vertex"), v = parse_long(toks[2], "vertex");
            if (u < 1 || u > n || v < 1 || v > n)
                throw VertexOutOfRange("vertex outside [1, " + std::to_string(n) + "] in '" +
                                       std::string(line) + "'");
            if (u == v) throw SelfLoop("self-loop 'e " + std::to_string(u) + " " +
                                       std::to_string(v) + "'");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw MalformedHeader("unexpected line '" + std::string(line) + "'");
        }
    }
    if (!have_header) throw MalformedHeader("missing 'p edge <n> <m>' header");
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
    long declared_order = -1;
    long max_id = -1;
    std::vector<std::pair<int, int>> edges;
    for (std::string_view raw : split_lines(text)) {
        std::string_view line = raw;
        const std::size_t hash = line.find('#');
        std::string_view comment;
        if (hash != std::string_view::npos) {
            comment = line.substr(hash);
            line = line.substr(0, hash);
        }
        // honor the writer's "# order <n>" directive
        if (!comment.empty()) {
            const auto ctoks = tokenize(comment.substr(1));
            if (ctoks.size() == 2 && ctoks[0] == "order")
                declared_order = parse_long(ctoks[1], "order");
        }
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw MalformedHeader("expected 'u v', got '" + std::string(raw) + "'");
        const long u = parse_long(toks[0], "vertex"), v = parse_long(toks[1], "vertex");
        if (u < 0 || v < 0) throw VertexOutOfRange("negative vertex id in '" + std::string(raw) + "'");
        if (u == v) throw SelfLoop("self-loop '" + std::string(raw) + "'");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long order = max_id + 1;
    if (declared_order >= 0) {
        if (max_id >= declared_order)
            throw VertexOutOfRange("vertex id " + std::to_string(max_id) +
                                   " outside declared order " + std::to_string(declared_order));
        order = declared_order;
    }
    if (order < 1) throw EmptyMatrix("edge list describes no vertices");
    return Graph::from_edges(static_cast<std::size_t>(order), edges);
}

Graph parse_graph(std::string_view bytes, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return parse_graph6(bytes);
        case GraphFormat::Dimacs: return parse_dimacs(bytes);
        case GraphFormat::EdgeList: return parse_edge_list(bytes);
    }
    throw InvalidParams("unknown format");
}

namespace {

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else if (n <= 68719476735ull) {
        out += '~';
        out += '~';
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        throw OversizeOrder("graph too large for graph6");
    }
    unsigned acc = 0;
    int nbits = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1u : 0u);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    out += '\n';
    return out;
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << " " << g.edge_count() << "\n";
    for (auto [i, j] : g.edges()) out << "e " << (i + 1) << " " << (j + 1) << "\n";
    return out.str();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# order " << g.order() << "\n";
    for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
    return out.str();
}

} // namespace

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Graph6: return write_graph6(g);
        case GraphFormat::Dimacs: return write_dimacs(g);
        case GraphFormat::EdgeList: return write_edge_list(g);
    }
    throw InvalidParams("unknown format");
}

namespace {

std::optional<GraphFormat> format_from_extension(const std::string& path) {
    const std::size_t dot = path.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    const std::string ext = path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") return GraphFormat::Graph6;
    if (ext == "dimacs" || ext == "col" || ext == "clq") return GraphFormat::Dimacs;
    if (ext == "el" || ext == "edges" || ext == "edgelist") return GraphFormat::EdgeList;
    return std::nullopt;
}

GraphFormat sniff_format(std::string_view content) {
    for (std::string_view line : split_lines(content)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "p" || toks[0] == "c") return GraphFormat::Dimacs;
        if (toks[0][0] == '#') return GraphFormat::EdgeList;
        if (toks.size() == 2 &&
            std::all_of(toks[0].begin(), toks[0].end(),
                        [](unsigned char c) { return std::isdigit(c); }) &&
            std::all_of(toks[1].begin(), toks[1].end(),
                        [](unsigned char c) { return std::isdigit(c); }))
            return GraphFormat::EdgeList;
        return GraphFormat::Graph6;
    }
    return GraphFormat::Graph6;
}

} // namespace

GraphDocument load_graph_file(const std::string& path, std::optional<GraphFormat> format) {
    std::string content;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        content = buf.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        content = buf.str();
    }
    GraphFormat fmt = format ? *format
                             : format_from_extension(path).value_or(sniff_format(content));
    Graph g = parse_graph(content, fmt);
    const std::size_t slash = path.rfind('/');
    return GraphDocument{std::move(g), fmt,
                         slash == std::string::npos ? path : path.substr(slash + 1)};
}

} // namespace giso
