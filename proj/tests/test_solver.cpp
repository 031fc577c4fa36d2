#include <doctest.h>

#include <vector>

#include "giso/errors.hpp"
#include "giso/generators.hpp"
#include "giso/solver.hpp"

#include "oracles.hpp"

using namespace giso;

TEST_CASE("verify checks the edge-iff condition both ways") {
    const auto g = path(4);
    CHECK(verify(g, g, Permutation::identity(4)));
    CHECK(verify(g, g, Permutation({3, 2, 1, 0})));   // reversal
    CHECK_FALSE(verify(g, g, Permutation({1, 0, 2, 3})));
    const auto p = Permutation::random(4, 5);
    CHECK(verify(g, permute(g, p), p));
    CHECK_THROWS_AS(verify(g, cycle(5), Permutation::identity(4)), OrderMismatch);
    CHECK_THROWS_AS(verify(g, g, Permutation::identity(3)), LengthMismatch);
}

TEST_CASE("brute force oracle") {
    const auto yes = brute_force(complete(3), cycle(3));
    CHECK(yes.verdict == Verdict::Isomorphic);
    REQUIRE(yes.mapping.has_value());
    CHECK(verify(complete(3), cycle(3), *yes.mapping));

    const auto no = brute_force(cycle(4), path(4));
    CHECK(no.verdict == Verdict::NonIsomorphic);
    CHECK_FALSE(no.mapping.has_value());
    CHECK(no.stats.nodes == 24);  // tried all 4! bijections

    CHECK(brute_force(cycle(4), cycle(5)).verdict == Verdict::NonIsomorphic);
    CHECK_THROWS_AS(brute_force(complete(11), complete(11)), OrderTooLarge);
    CHECK_NOTHROW(brute_force(complete(11), complete(11), 11));
}

TEST_CASE("solve finds a verified mapping for relabeled graphs") {
    const auto g = petersen();
    const auto p = Permutation::random(10, 42);
    const auto v = solve(g, permute(g, p));
    CHECK(v.verdict == Verdict::Isomorphic);
    REQUIRE(v.mapping.has_value());
    CHECK(verify(g, permute(g, p), *v.mapping));
    CHECK(v.stats.nodes >= 10);  // at least one placement per vertex
    CHECK(v.stats.levels >= 1);
}

TEST_CASE("solve answers order mismatches without work") {
    const auto v = solve(cycle(5), cycle(6));
    CHECK(v.verdict == Verdict::NonIsomorphic);
    CHECK(v.stats.nodes == 0);
    CHECK(v.stats.levels == 0);
}

TEST_CASE("6-cycle vs two triangles dies in stage one") {
    const auto v = solve(cycle(6), disjoint_union({complete(3), complete(3)}));
    CHECK(v.verdict == Verdict::NonIsomorphic);
    CHECK(v.stats.nodes == 0);       // refuted before any search
    CHECK(v.stats.levels == 3);      // the separating level
    CHECK(v.stats.f_density == 1.0);
    CHECK_FALSE(v.mapping.has_value());
}

TEST_CASE("same-parameter strongly regular pair needs stage two") {
    // Walk counts cannot split these: F stays empty and the backtracking
    // search alone must refute the pair.
    const auto v = solve(shrikhande(), rook(4));
    CHECK(v.verdict == Verdict::NonIsomorphic);
    CHECK(v.stats.f_density == 0.0);
    CHECK(v.stats.unique_candidate_fraction == 0.0);
    CHECK(v.stats.nodes > 0);
}

TEST_CASE("node budget exhaustion is reported, never misreported as a verdict") {
    const auto g = random_graph(20, 0.5, 6);
    const auto h = permute(g, Permutation::random(20, 7));
    SolveConfig tight;
    tight.node_budget = 1;
    const auto v = solve(g, h, tight);
    CHECK(v.verdict == Verdict::Exhausted);
    CHECK_FALSE(v.mapping.has_value());
    CHECK(v.stats.nodes <= 1);

    const auto full = solve(g, h);
    CHECK(full.verdict == Verdict::Isomorphic);
}

TEST_CASE("solve agrees with brute force on small graphs") {
    int iso = 0, non = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);  // 4..7
        const auto a = random_graph(n, 0.5, seed);
        const auto b = (seed % 2 == 0)
                           ? permute(a, Permutation::random(static_cast<std::size_t>(n), seed + 1000))
                           : random_graph(n, 0.5, seed + 5000);
        const auto expect = brute_force(a, b);
        const auto got = solve(a, b);
        CHECK(got.verdict == expect.verdict);
        if (got.verdict == Verdict::Isomorphic) {
            ++iso;
            REQUIRE(got.mapping.has_value());
            CHECK(verify(a, b, *got.mapping));
        } else {
            ++non;
        }
    }
    CHECK(iso >= 10);  // the sample covers both outcomes
    CHECK(non >= 10);
}

TEST_CASE("the naive baseline agrees and never searches less") {
    SolveConfig naive;
    naive.use_forbidden = false;
    const std::pair<Graph, Graph> cases[] = {
        {cycle(6), disjoint_union({complete(3), complete(3)})},
        {petersen(), permute(petersen(), Permutation::random(10, 1))},
        {random_graph(12, 0.4, 2), permute(random_graph(12, 0.4, 2), Permutation::random(12, 3))},
        {random_graph(12, 0.4, 4), random_graph(12, 0.4, 5)},
    };
    for (const auto& [a, b] : cases) {
        const auto with_f = solve(a, b);
        const auto without_f = solve(a, b, naive);
        CHECK(with_f.verdict == without_f.verdict);
        CHECK(with_f.stats.nodes <= without_f.stats.nodes);
        CHECK(without_f.stats.levels == 0);  // stage one skipped entirely
        CHECK(without_f.stats.f_density == 0.0);
    }
}

TEST_CASE("solve handles tiny graphs") {
    const auto k1 = complete(1);
    const auto v = solve(k1, k1);
    CHECK(v.verdict == Verdict::Isomorphic);
    REQUIRE(v.mapping.has_value());
    CHECK((*v.mapping)(0) == 0);

    CHECK(solve(complete(2), path(2)).verdict == Verdict::Isomorphic);
    CHECK(solve(complete(2), Graph::from_edges(2, {})).verdict == Verdict::NonIsomorphic);
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::Isomorphic) == "isomorphic");
    CHECK(to_string(Verdict::NonIsomorphic) == "non-isomorphic");
    CHECK(to_string(Verdict::Exhausted) == "exhausted");
}

TEST_CASE("solve is deterministic") {
    const auto a = random_graph(18, 0.45, 21);
    const auto b = permute(a, Permutation::random(18, 22));
    const auto v1 = solve(a, b);
    const auto v2 = solve(a, b);
    CHECK(v1.verdict == v2.verdict);
    REQUIRE(v1.mapping.has_value());
    REQUIRE(v2.mapping.has_value());
    CHECK(*v1.mapping == *v2.mapping);
    CHECK(v1.stats.nodes == v2.stats.nodes);
}

TEST_CASE("timing fields are populated") {
    const auto v = solve(petersen(), permute(petersen(), Permutation::random(10, 2)));
    CHECK(v.stats.extension_ms >= 0.0);
    CHECK(v.stats.search_ms >= 0.0);
}
