#include "doctest.h"

#include "kstab/exact_oracle.hpp"
#include "kstab/families.hpp"
#include "kstab/rng.hpp"

using namespace kstab;

namespace {

Graph k_complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, 5 + i);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

}  // namespace

TEST_CASE("max k-stable trivial cases") {
    Graph k5 = k_complete(5);
    auto [set, stats] = exact_max_kstable(k5, 3);
    REQUIRE(stats.proven_optimal);
    CHECK(set.size() == 4);

    auto [all, stats2] = exact_max_kstable(k5, 4);
    CHECK(all.size() == 5);

    auto [c6set, stats3] = exact_max_kstable(cycle(6), 2);
    CHECK(c6set.size() == 6);
}

TEST_CASE("min dominating trivial cases") {
    auto [dk, s1] = exact_min_dominating(k_complete(7));
    REQUIRE(s1.proven_optimal);
    CHECK(dk.size() == 1);

    auto [dc, s2] = exact_min_dominating(cycle(6));
    REQUIRE(s2.proven_optimal);
    CHECK(dc.size() == 2);
}

TEST_CASE("petersen dominating number is 3, checked exhaustively") {
    Graph p = petersen();
    auto [d, stats] = exact_min_dominating(p);
    REQUIRE(stats.proven_optimal);
    // Independent exhaustive check over all 2- and 3-subsets.
    auto dominates = [&](const std::vector<int>& ds) {
        std::vector<char> cov(10, 0);
        for (int v : ds) {
            cov[static_cast<size_t>(v)] = 1;
            for (int w : p.neighbors(v)) cov[static_cast<size_t>(w)] = 1;
        }
        for (int v = 0; v < 10; ++v)
            if (!cov[static_cast<size_t>(v)]) return false;
        return true;
    };
    bool any2 = false;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            if (dominates({a, b})) any2 = true;
    bool any3 = false;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            for (int c = b + 1; c < 10; ++c)
                if (dominates({a, b, c})) any3 = true;
    CHECK_FALSE(any2);
    CHECK(any3);
    CHECK(d.size() == 3);
}

TEST_CASE("budget exhaustion returns an incumbent without optimality") {
    Graph g = random_planar_triangulation(60, 99);
    SearchBudget tiny;
    tiny.node_limit = 5;
    auto [set, stats] = exact_max_kstable(g, 3, tiny);
    CHECK_FALSE(stats.proven_optimal);
    CHECK(verify_kstable(g, set, 3));
}

TEST_CASE("oracle respects disconnected graphs") {
    // K5 plus two isolated vertices: optimum is 4 + 2.
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
    Graph g = Graph::from_edges(7, e);
    auto [set, stats] = exact_max_kstable(g, 3);
    REQUIRE(stats.proven_optimal);
    CHECK(set.size() == 6);
}

TEST_CASE("triangulation enumeration counts are Catalan") {
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    for (int n = 4; n <= 9; ++n) {
        long long count = 0;
        enumerate_polygon_triangulations(n, [&](const OuterplaneGraph& og) {
            ++count;
            CHECK(static_cast<int>(og.chords().size()) == n - 3);
        });
        CHECK(count == catalan(n - 2));
    }
    CHECK_THROWS_AS(enumerate_polygon_triangulations(15, [](const OuterplaneGraph&) {}), NTooLarge);
}

TEST_CASE("oracle floor 2n/3 over all small triangulations, exhaustively") {
    for (int n = 3; n <= 10; ++n) {
        enumerate_polygon_triangulations(n, [&](const OuterplaneGraph& og) {
            auto [set, stats] = exact_max_kstable(og.graph(), 3);
            REQUIRE(stats.proven_optimal);
            CHECK(3 * set.size() >= 2 * n);
        });
    }
}

TEST_CASE("brute-force cross-check of the k-stable oracle on random small graphs") {
    Rng rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng.below(6));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(2) == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        int k = 1 + static_cast<int>(rng.below(3));
        int best = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> ids;
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) ids.push_back(v);
            VertexSet s(ids);
            if (verify_kstable(g, s, k)) best = std::max(best, s.size());
        }
        auto [set, stats] = exact_max_kstable(g, k);
        REQUIRE(stats.proven_optimal);
        CHECK(set.size() == best);
        CHECK(verify_kstable(g, set, k));
    }
}
