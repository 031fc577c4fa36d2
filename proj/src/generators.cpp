#include "giso/generators.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <set>
#include <utility>

namespace giso {

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do { r = rng(); } while (r >= limit);
    return r % bound;
}

// Uniform double in [0, 1) from the top 53 bits of the engine output.
double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Graph cycle(int n) {
    if (n < 3) throw InvalidParams("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(static_cast<std::size_t>(n), edges, "cycle(" + std::to_string(n) + ")");
}

Graph path(int n) {
    if (n < 1) throw InvalidParams("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(static_cast<std::size_t>(n), edges, "path(" + std::to_string(n) + ")");
}

Graph complete(int n) {
    if (n < 1) throw InvalidParams("complete needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(static_cast<std::size_t>(n), edges, "complete(" + std::to_string(n) + ")");
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spoke
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges, "petersen");
}

Graph circulant(int n, const std::vector<int>& connections) {
    if (n < 1) throw InvalidParams("circulant needs n >= 1");
    if (connections.empty()) throw InvalidParams("circulant needs a nonempty connection set");
    std::set<int> offsets;
    for (int c : connections) {
        const int r = ((c % n) + n) % n;
        if (r == 0) throw InvalidParams("circulant connection set contains 0 (mod n)");
        offsets.insert(r);
        offsets.insert(n - r);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int o : offsets) {
            const int j = (i + o) % n;
            if (i < j) edges.emplace_back(i, j);
        }
    return Graph::from_edges(static_cast<std::size_t>(n), edges, "circulant(" + std::to_string(n) + ")");
}

Graph rook(int k) {
    if (k < 1) throw InvalidParams("rook needs k >= 1");
    const int n = k * k;
    auto id = [k](int r, int c) { return k * r + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            for (int c2 = c + 1; c2 < k; ++c2) edges.emplace_back(id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < k; ++r2) edges.emplace_back(id(r, c), id(r2, c));
        }
    return Graph::from_edges(static_cast<std::size_t>(n), edges, "rook(" + std::to_string(k) + ")");
}

Graph shrikhande() {
    const std::vector<std::pair<int, int>> conn = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    auto id = [](int a, int b) { return 4 * a + b; };
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (auto [da, db] : conn) {
                const int u = id(a, b);
                const int v = id((a + da) % 4, (b + db) % 4);
                if (u < v) edges.emplace_back(u, v);
            }
    return Graph::from_edges(16, edges, "shrikhande");
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw InvalidParams("union needs at least one part");
    std::size_t total = 0;
    for (const auto& g : parts) total += g.order();
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    for (const auto& g : parts) {
        for (auto [i, j] : g.edges()) edges.emplace_back(offset + i, offset + j);
        offset += static_cast<int>(g.order());
    }
    return Graph::from_edges(total, edges, "union");
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw InvalidParams("random needs n >= 1");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw InvalidParams("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (draw_unit(rng) < edge_probability) edges.emplace_back(i, j);
    return Graph::from_edges(static_cast<std::size_t>(n), edges, "random");
}

Graph random_regular(int n, int degree, std::uint64_t seed) {
    if (n < 1) throw InvalidParams("random-regular needs n >= 1");
    if (degree < 0 || degree >= n) throw InvalidParams("random-regular needs 0 <= d < n");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw InvalidParams("random-regular needs n*d even");
    std::mt19937_64 rng(seed);
    const std::size_t stubs = static_cast<std::size_t>(n) * static_cast<std::size_t>(degree);
    std::vector<int> pool(stubs);
    for (;;) { // full restart on any loop or duplicate edge
        std::size_t idx = 0;
        for (int v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d) pool[idx++] = v;
        for (std::size_t i = stubs; i > 1; --i)
            std::swap(pool[i - 1], pool[draw_below(rng, i)]);
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * n, 0);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs && ok; i += 2) {
            const int u = pool[i], v = pool[i + 1];
            if (u == v) { ok = false; break; }
            auto& cell = seen[static_cast<std::size_t>(u) * n + v];
            if (cell) { ok = false; break; }
            cell = 1;
            seen[static_cast<std::size_t>(v) * n + u] = 1;
            edges.emplace_back(u, v);
        }
        if (ok) return Graph::from_edges(static_cast<std::size_t>(n), edges, "random-regular");
    }
}

namespace {

// Splits "a,b,c" at top-level commas, respecting nested parentheses.
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long parse_int(const std::string& s) {
    const std::string t = trim(s);
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(t, &pos);
    } catch (const std::exception&) {
        throw InvalidParams("expected an integer, got '" + t + "'");
    }
    if (pos != t.size()) throw InvalidParams("expected an integer, got '" + t + "'");
    return v;
}

double parse_double(const std::string& s) {
    const std::string t = trim(s);
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw InvalidParams("expected a number, got '" + t + "'");
    }
    if (pos != t.size()) throw InvalidParams("expected a number, got '" + t + "'");
    return v;
}

std::uint64_t parse_seed(const std::string& s) {
    const std::string t = trim(s);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(t, &pos);
    } catch (const std::exception&) {
        throw InvalidParams("expected a seed, got '" + t + "'");
    }
    if (pos != t.size()) throw InvalidParams("expected a seed, got '" + t + "'");
    return v;
}

} // namespace

Graph generate(const std::string& family_spec) {
    const std::string spec = trim(family_spec);
    const std::size_t open = spec.find('(');
    std::string name = spec;
    std::vector<std::string> args;
    if (open != std::string::npos) {
        if (spec.back() != ')') throw InvalidParams("unbalanced parentheses in '" + spec + "'");
        name = trim(spec.substr(0, open));
        const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
        if (!trim(inner).empty()) args = split_args(inner);
    }

    auto want = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw InvalidParams("wrong number of arguments for '" + name + "'");
    };

    if (name == "cycle")    { want(1, 1); return cycle(static_cast<int>(parse_int(args[0]))); }
    if (name == "path")     { want(1, 1); return path(static_cast<int>(parse_int(args[0]))); }
    if (name == "complete") { want(1, 1); return complete(static_cast<int>(parse_int(args[0]))); }
    if (name == "petersen") { want(0, 0); return petersen(); }
    if (name == "shrikhande") { want(0, 0); return shrikhande(); }
    if (name == "rook")     { want(1, 1); return rook(static_cast<int>(parse_int(args[0]))); }
    if (name == "circulant") {
        want(2, 64);
        std::vector<int> conn;
        for (std::size_t i = 1; i < args.size(); ++i)
            conn.push_back(static_cast<int>(parse_int(args[i])));
        return circulant(static_cast<int>(parse_int(args[0])), conn);
    }
    if (name == "union") {
        want(1, 64);
        std::vector<Graph> parts;
        for (const auto& a : args) parts.push_back(generate(a));
        return disjoint_union(parts);
    }
    if (name == "random") {
        want(2, 3);
        const std::uint64_t seed = args.size() == 3 ? parse_seed(args[2]) : 0;
        return random_graph(static_cast<int>(parse_int(args[0])), parse_double(args[1]), seed)
            .with_label(spec);
    }
    if (name == "random-regular") {
        want(2, 3);
        const std::uint64_t seed = args.size() == 3 ? parse_seed(args[2]) : 0;
        return random_regular(static_cast<int>(parse_int(args[0])),
                              static_cast<int>(parse_int(args[1])), seed)
            .with_label(spec);
    }
    throw InvalidParams("unknown graph family '" + name + "'");
}

} // namespace giso
