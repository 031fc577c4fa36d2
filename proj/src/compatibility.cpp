#include "giso/compatibility.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>
#include <unordered_map>

namespace giso {

VertexSignature vertex_signature(const PathCountMatrix& m, int vertex) {
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= m.order())
        throw IndexOutOfRange("vertex " + std::to_string(vertex) + " out of range");
    VertexSignature s;
    s.level = m.level();
    s.diagonal = m.at(vertex, vertex);
    const auto row = m.row(vertex);
    s.row.assign(row.begin(), row.end());
    std::sort(s.row.begin(), s.row.end());
    return s;
}

bool compatible(const VertexSignature& a, const VertexSignature& b) {
    if (a.level != b.level) throw LevelMismatch("signature levels differ");
    if (a.row.size() != b.row.size()) throw SizeMismatch("signature row lengths differ");
    return a.diagonal == b.diagonal && a.row == b.row;
}

double ForbiddenMatrix::density() const {
    if (n_ == 0) return 0.0;
    std::size_t set = 0;
    for (auto c : cells_) set += c;
    return static_cast<double>(set) / static_cast<double>(n_ * n_);
}

double ForbiddenMatrix::unique_candidate_fraction() const {
    if (n_ == 0) return 0.0;
    std::size_t unique = 0;
    for (int c : row_candidates_) unique += (c == 1);
    return static_cast<double>(unique) / static_cast<double>(n_);
}

namespace {

// Sorted (optionally deduplicated) rows plus diagonal and a row hash for one
// graph at one level. The hash is a fast path only; equality is decided on
// the full contents.
struct LevelSignatures {
    std::vector<std::uint32_t> diag;
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint64_t> hash;
};

std::uint64_t fnv1a(std::uint64_t h, std::uint32_t v) {
    for (int b = 0; b < 4; ++b) {
        h ^= (v >> (8 * b)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

LevelSignatures level_signatures(const PathCountMatrix& m, RowMatch mode) {
    const std::size_t n = m.order();
    LevelSignatures out;
    out.diag.resize(n);
    out.rows.resize(n);
    out.hash.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.diag[i] = m.at(static_cast<int>(i), static_cast<int>(i));
        auto row = m.row(static_cast<int>(i));
        auto& r = out.rows[i];
        r.assign(row.begin(), row.end());
        std::sort(r.begin(), r.end());
        if (mode == RowMatch::SetOnly) r.erase(std::unique(r.begin(), r.end()), r.end());
        std::uint64_t h = fnv1a(0xcbf29ce484222325ull, out.diag[i]);
        for (std::uint32_t v : r) h = fnv1a(h, v);
        out.hash[i] = h;
    }
    return out;
}

// Joint class ids over the vertices of both graphs: two vertices (from
// either side) share an id iff their (diagonal, row) signatures are equal.
std::pair<std::vector<int>, std::vector<int>>
assign_classes(const LevelSignatures& a, const LevelSignatures& b) {
    const std::size_t n = a.diag.size();
    std::vector<int> idx(2 * n);
    std::iota(idx.begin(), idx.end(), 0);
    auto sig_of = [&](int k) -> const LevelSignatures& {
        return static_cast<std::size_t>(k) < n ? a : b;
    };
    auto local = [&](int k) {
        return static_cast<std::size_t>(k) < n ? static_cast<std::size_t>(k)
                                               : static_cast<std::size_t>(k) - n;
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        const auto& sx = sig_of(x); const auto& sy = sig_of(y);
        const std::size_t lx = local(x), ly = local(y);
        if (sx.hash[lx] != sy.hash[ly]) return sx.hash[lx] < sy.hash[ly];
        if (sx.diag[lx] != sy.diag[ly]) return sx.diag[lx] < sy.diag[ly];
        return sx.rows[lx] < sy.rows[ly];
    });
    auto equal = [&](int x, int y) {
        const auto& sx = sig_of(x); const auto& sy = sig_of(y);
        const std::size_t lx = local(x), ly = local(y);
        return sx.hash[lx] == sy.hash[ly] && sx.diag[lx] == sy.diag[ly] &&
               sx.rows[lx] == sy.rows[ly];
    };
    std::vector<int> cls_a(n, -1), cls_b(n, -1);
    int cls = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0 && !equal(idx[k - 1], idx[k])) ++cls;
        const int v = idx[k];
        if (static_cast<std::size_t>(v) < n) cls_a[local(v)] = cls;
        else cls_b[local(v)] = cls;
    }
    return {std::move(cls_a), std::move(cls_b)};
}

} // namespace

ForbiddenMatrix build_forbidden(const Graph& g, const Graph& g_prime,
                                const ForbiddenOptions& opt) {
    if (g.order() != g_prime.order())
        throw OrderMismatch("graph orders " + std::to_string(g.order()) + " and " +
                            std::to_string(g_prime.order()) + " differ");
    const std::size_t n = g.order();
    const int alpha_max = opt.alpha_max > 0 ? opt.alpha_max : static_cast<int>(n);
    if (opt.stall < 1) throw InvalidParams("stall must be >= 1");

    ForbiddenMatrix f(n);
    PathCountMatrix cur = PathCountMatrix::initial(g);
    PathCountMatrix cur_prime = PathCountMatrix::initial(g_prime);

    bool armed = false;  // stays unarmed until the first level that forbids anything
    int quiet = 0;
    for (int level = 1; level <= alpha_max; ++level) {
        if (level > 1) {
            cur = extend_step(g, cur);
            cur_prime = extend_step(g_prime, cur_prime);
        }
        f.set_level_reached(level);

        const LevelSignatures sa = level_signatures(cur, opt.row_match);
        const LevelSignatures sb = level_signatures(cur_prime, opt.row_match);
        const auto [cls_a, cls_b] = assign_classes(sa, sb);

        bool changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (cls_a[i] != cls_b[j] && !f.forbidden(static_cast<int>(i), static_cast<int>(j))) {
                    f.forbid(static_cast<int>(i), static_cast<int>(j));
                    changed = true;
                }

        if (changed) {
            armed = true;
            quiet = 0;
        } else if (armed) {
            ++quiet;
        }

        if (opt.stop_on_dead_row) {
            bool dead = false;
            for (int c : f.row_candidates()) dead = dead || c == 0;
            if (dead) break;
        }
        if (armed && quiet >= opt.stall) break;
    }
    return f;
}

Feasibility feasibility(const ForbiddenMatrix& f) {
    const std::size_t n = f.order();
    const auto& cells = f.cells();

    for (std::size_t i = 0; i < n; ++i)
        if (f.row_candidates()[i] == 0) return {false, "fully-forbidden row"};

    std::vector<int> col_forbidden(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) col_forbidden[j] += cells[i * n + j];
    for (std::size_t j = 0; j < n; ++j)
        if (static_cast<std::size_t>(col_forbidden[j]) == n)
            return {false, "fully-forbidden column"};

    // Vertices with identical F rows form one signature class of G; its
    // allowed-column set is the matching class of G'. A bijection between
    // the graphs must map classes onto classes, so the sizes have to agree.
    std::unordered_map<std::string_view, int> groups;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string_view key(reinterpret_cast<const char*>(cells.data() + i * n), n);
        ++groups[key];
    }
    for (const auto& [key, count] : groups) {
        int allowed = 0;
        for (char c : key) allowed += (c == 0);
        if (allowed != count) return {false, "signature class sizes differ"};
    }
    return {true, ""};
}

} // namespace giso
