#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "giso/extension.hpp"
#include "giso/graph.hpp"

namespace giso {

/// Per-vertex invariant at one level: the diagonal (closed-walk count) and
/// the full row as a sorted multiset. The diagonal entry is included in the
/// row multiset; the separate diagonal check is the stricter clause.
struct VertexSignature {
    int level = 1;
    std::uint32_t diagonal = 0;
    std::vector<std::uint32_t> row;  // sorted ascending, order() entries
};

VertexSignature vertex_signature(const PathCountMatrix& m, int vertex);

/// True iff the diagonals match and the row multisets are equal. Signatures
/// must come from the same level and equally sized graphs.
bool compatible(const VertexSignature& a, const VertexSignature& b);

/// Row comparison mode. Multiset equality is the sound default (an
/// isomorphism permutes one row onto the other entry-for-entry); the weaker
/// set reading exists for comparison experiments only.
enum class RowMatch { Multiset, SetOnly };

struct ForbiddenOptions {
    int alpha_max = 0;  // 0 = graph order
    int stall = 2;      // no-progress levels tolerated once any exclusion happened
    RowMatch row_match = RowMatch::Multiset;
    bool stop_on_dead_row = true;
};

/// Boolean matrix of excluded assignments: forbidden(i, i') means no
/// isomorphism maps vertex i of G to vertex i' of G'. Entries only ever go
/// from allowed to forbidden.
class ForbiddenMatrix {
public:
    explicit ForbiddenMatrix(std::size_t n)
        : n_(n), cells_(n * n, 0), row_candidates_(n, static_cast<int>(n)) {}

    std::size_t order() const { return n_; }
    bool forbidden(int i, int i_prime) const {
        return cells_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(i_prime)] != 0;
    }

    /// Monotone write; allowed -> forbidden only.
    void forbid(int i, int i_prime) {
        auto& c = cells_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(i_prime)];
        if (!c) {
            c = 1;
            --row_candidates_[static_cast<std::size_t>(i)];
        }
    }

    int level_reached() const { return level_reached_; }
    void set_level_reached(int level) { level_reached_ = level; }

    /// Allowed columns per row of G.
    const std::vector<int>& row_candidates() const { return row_candidates_; }

    /// Fraction of entries set, in [0, 1].
    double density() const;

    /// Fraction of rows with exactly one allowed column.
    double unique_candidate_fraction() const;

    const std::vector<std::uint8_t>& cells() const { return cells_; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;  // n*n, row = G vertex, col = G' vertex
    std::vector<int> row_candidates_;
    int level_reached_ = 0;
};

/// Builds F by extending both graphs level by level and forbidding every
/// pair whose signatures differ at any computed level. Stops at alpha_max,
/// after `stall` consecutive quiet levels once any exclusion has happened,
/// or as soon as some row has no candidates left. Levels always complete;
/// F is never left mid-level.
ForbiddenMatrix build_forbidden(const Graph& g, const Graph& g_prime,
                                const ForbiddenOptions& opt = {});

struct Feasibility {
    bool feasible = true;
    std::string reason;  // empty when feasible
    explicit operator bool() const { return feasible; }
};

/// Quick infeasibility screen over an F produced by build_forbidden:
/// a row or column with no candidates, or signature classes whose sizes
/// cannot be matched by any bijection. Feasible does not imply isomorphic.
Feasibility feasibility(const ForbiddenMatrix& f);

} // namespace giso
