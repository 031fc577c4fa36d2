#include "giso/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace giso {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool is_isomorphism(const Graph& g, const Graph& g_prime, const std::vector<int>& h) {
    const int n = static_cast<int>(g.order());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j) != g_prime.has_edge(h[static_cast<std::size_t>(i)],
                                                     h[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

class Backtracker {
public:
    Backtracker(const Graph& a, const Graph& b, const ForbiddenMatrix* f,
                std::vector<int> order, std::uint64_t budget)
        : a_(a), b_(b), f_(f), order_(std::move(order)), budget_(budget),
          map_(a.order(), -1), used_(b.order(), 0) {}

    bool run() { return dfs(0); }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& mapping() const { return map_; }

private:
    bool dfs(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int u = order_[depth];
        const int n = static_cast<int>(b_.order());
        for (int v = 0; v < n; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            if (f_ && f_->forbidden(u, v)) continue;
            bool ok = true;
            for (std::size_t e = 0; e < depth; ++e) {
                const int w = order_[e];
                if (a_.has_edge(u, w) != b_.has_edge(v, map_[static_cast<std::size_t>(w)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            map_[static_cast<std::size_t>(u)] = v;
            used_[static_cast<std::size_t>(v)] = 1;
            if (dfs(depth + 1)) return true;
            if (exhausted_) return false;
            map_[static_cast<std::size_t>(u)] = -1;
            used_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    const ForbiddenMatrix* f_;
    std::vector<int> order_;
    std::uint64_t budget_;
    std::vector<int> map_;
    std::vector<std::uint8_t> used_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Isomorphic: return "isomorphic";
        case Verdict::NonIsomorphic: return "non-isomorphic";
        case Verdict::Exhausted: return "exhausted";
    }
    return "unknown";
}

bool verify(const Graph& g, const Graph& g_prime, const Permutation& h) {
    if (g.order() != g_prime.order()) throw OrderMismatch("graph orders differ");
    if (h.size() != g.order()) throw LengthMismatch("mapping length != graph order");
    return is_isomorphism(g, g_prime, h.map());
}

SolveVerdict solve(const Graph& g, const Graph& g_prime, const SolveConfig& config) {
    SolveVerdict out;
    if (g.order() != g_prime.order()) {
        out.verdict = Verdict::NonIsomorphic;
        return out;
    }
    const std::size_t n = g.order();

    const ForbiddenMatrix* f = nullptr;
    std::optional<ForbiddenMatrix> fm;
    const auto t0 = Clock::now();
    if (config.use_forbidden) {
        ForbiddenOptions fo;
        fo.alpha_max = config.alpha_max;
        fo.stall = config.stall;
        fo.row_match = config.row_match;
        fm.emplace(build_forbidden(g, g_prime, fo));
        f = &*fm;
        out.stats.levels = fm->level_reached();
        out.stats.f_density = fm->density();
        out.stats.unique_candidate_fraction = fm->unique_candidate_fraction();
        const Feasibility feas = feasibility(*fm);
        out.stats.extension_ms = ms_since(t0);
        if (!feas.feasible) {
            out.verdict = Verdict::NonIsomorphic;
            return out;
        }
    }

    // Most-constrained first: fewest allowed columns, ties by vertex index.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (f) {
        const auto& cand = f->row_candidates();
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return cand[static_cast<std::size_t>(x)] < cand[static_cast<std::size_t>(y)];
        });
    }

    const auto t1 = Clock::now();
    Backtracker bt(g, g_prime, f, std::move(order), config.node_budget);
    const bool found = bt.run();
    out.stats.nodes = bt.nodes();
    out.stats.search_ms = ms_since(t1);

    if (found) {
        Permutation h(bt.mapping());
        if (!verify(g, g_prime, h))
            throw Error("internal error: search produced a non-isomorphism");
        out.verdict = Verdict::Isomorphic;
        out.mapping = std::move(h);
    } else if (bt.exhausted()) {
        out.verdict = Verdict::Exhausted;
    } else {
        out.verdict = Verdict::NonIsomorphic;
    }
    return out;
}

SolveVerdict brute_force(const Graph& g, const Graph& g_prime, int max_order) {
    if (g.order() > static_cast<std::size_t>(max_order) ||
        g_prime.order() > static_cast<std::size_t>(max_order))
        throw OrderTooLarge("brute force capped at order " + std::to_string(max_order));
    SolveVerdict out;
    const auto t0 = Clock::now();
    if (g.order() != g_prime.order()) {
        out.verdict = Verdict::NonIsomorphic;
        return out;
    }
    std::vector<int> h(g.order());
    std::iota(h.begin(), h.end(), 0);
    do {
        ++out.stats.nodes;
        if (is_isomorphism(g, g_prime, h)) {
            out.verdict = Verdict::Isomorphic;
            out.mapping = Permutation(h);
            out.stats.search_ms = ms_since(t0);
            return out;
        }
    } while (std::next_permutation(h.begin(), h.end()));
    out.verdict = Verdict::NonIsomorphic;
    out.stats.search_ms = ms_since(t0);
    return out;
}

} // namespace giso
