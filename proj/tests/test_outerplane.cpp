#include "doctest.h"

#include "kstab/exact_oracle.hpp"
#include "kstab/families.hpp"
#include "kstab/outerplane.hpp"
#include "kstab/rng.hpp"

using namespace kstab;

namespace {

// Fan F5: path 1-2-3-4 plus apex 0, outer order 0,1,2,3,4.
Graph fan5() {
    return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

std::vector<int> identity_order(int n) {
    std::vector<int> o(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) o[static_cast<size_t>(i)] = i;
    return o;
}

}  // namespace

TEST_CASE("from_graph canonical cases") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    OuterplaneGraph og = OuterplaneGraph::from_graph(k3, {0, 1, 2});
    CHECK(og.chords().empty());

    OuterplaneGraph fan = OuterplaneGraph::from_graph(fan5(), {0, 1, 2, 3, 4});
    CHECK(fan.chords() == std::vector<Edge>{{0, 2}, {0, 3}});

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK_THROWS_AS(OuterplaneGraph::from_graph(c5, identity_order(5)), NotMaximalOuterplanar);
}

TEST_CASE("crossing chords are rejected") {
    CHECK_THROWS_AS(OuterplaneGraph(6, {{0, 2}, {1, 3}, {0, 4}}), NotMaximalOuterplanar);
}

TEST_CASE("complete_to_maximal") {
    Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    OuterplaneGraph og = complete_to_maximal(c6, identity_order(6));
    CHECK(og.chords().size() == 3);

    // Already-maximal input is unchanged.
    OuterplaneGraph fan = complete_to_maximal(fan5(), {0, 1, 2, 3, 4});
    CHECK(fan.chords() == std::vector<Edge>{{0, 2}, {0, 3}});

    // P4 completes to the unique 4-vertex triangulation shape: 5 edges.
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    OuterplaneGraph q = complete_to_maximal(p4, identity_order(4));
    CHECK(q.graph().m() == 5);
    CHECK(q.chords().size() == 1);

    // Crossing witness is rejected.
    Graph cross = Graph::from_edges(4, {{0, 2}, {1, 3}});
    CHECK_THROWS_AS(complete_to_maximal(cross, identity_order(4)), WitnessInvalid);

    // Isolated vertices get chained into the cycle.
    Graph iso = Graph(5);
    OuterplaneGraph ogi = complete_to_maximal(iso, identity_order(5));
    CHECK(ogi.graph().m() == 2 * 5 - 3);
}

TEST_CASE("split basics and size identity") {
    OuterplaneGraph fan = OuterplaneGraph::from_graph(fan5(), {0, 1, 2, 3, 4});
    auto [lo, hi] = fan.split(0, 2);
    CHECK(lo.vertices == VertexSet({0, 1, 2}));
    CHECK(hi.vertices == VertexSet({0, 2, 3, 4}));
    CHECK(lo.vertices.intersect(hi.vertices) == VertexSet({0, 2}));

    // Outer-cycle edge: one side is just the edge.
    auto [lo2, hi2] = fan.split(1, 2);
    CHECK(lo2.vertices.size() == 2);
    CHECK(hi2.vertices.size() == 5);

    CHECK_THROWS_AS(fan.split(1, 3), EdgeAbsent);
}

TEST_CASE("split sides always satisfy |A|+|B| = n+2 on random triangulations") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        OuterplaneGraph og = random_maximal_outerplanar(21, seed);
        for (auto [a, b] : og.graph().edge_list()) {
            auto [lo, hi] = og.split(a, b);
            CHECK(lo.vertices.size() + hi.vertices.size() == og.n() + 2);
            // Only the endpoints of a chord have neighbors on the far side.
            for (int p : lo.vertices) {
                if (p == a || p == b) continue;
                for (int q : og.graph().neighbors(p)) CHECK(lo.vertices.contains(q));
            }
        }
    }
}

TEST_CASE("sub materializes a split side as maximal outerplanar") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        OuterplaneGraph og = random_maximal_outerplanar(15, seed);
        for (auto [a, b] : og.graph().edge_list()) {
            auto [lo, hi] = og.split(a, b);
            OuterplaneGraph sl = og.sub(lo);
            CHECK(sl.n() == lo.vertices.size());
            if (sl.n() >= 3) CHECK(static_cast<int>(sl.chords().size()) == sl.n() - 3);
            OuterplaneGraph sh = og.sub(hi);
            CHECK(sh.n() == hi.vertices.size());
        }
    }
}

TEST_CASE("weak dual shapes") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(OuterplaneGraph::from_graph(k3, {0, 1, 2}).weak_dual().faces.size() == 1);

    OuterplaneGraph fan = OuterplaneGraph::from_graph(fan5(), {0, 1, 2, 3, 4});
    WeakDual d = fan.weak_dual();
    CHECK(d.faces.size() == 3);
    CHECK(d.is_path());
    CHECK(fan.is_outerpath());

    for (uint64_t seed = 0; seed < 200; ++seed) {
        OuterplaneGraph og = random_maximal_outerplanar(12, seed);
        WeakDual wd = og.weak_dual();
        CHECK(wd.faces.size() == 10);
        int edges = 0;
        for (size_t f = 0; f < wd.faces.size(); ++f) {
            CHECK(wd.degree(static_cast<int>(f)) <= 3);
            edges += wd.degree(static_cast<int>(f));
        }
        CHECK(edges == 2 * (static_cast<int>(wd.faces.size()) - 1));  // tree
    }
}

TEST_CASE("edge distance and parent") {
    OuterplaneGraph fan = OuterplaneGraph::from_graph(fan5(), {0, 1, 2, 3, 4});
    auto edges = fan.graph().edge_list();
    auto dist = fan.edge_distances({0, 1});
    // (3,4) lies in the far extreme face of the fan.
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] == Edge{3, 4}) CHECK(dist[i] == 3);
        if (edges[i] == Edge{0, 1}) CHECK(dist[i] == 0);
    }
    auto par = fan.edge_parent({3, 4}, {0, 1});
    REQUIRE(par.has_value());
    CHECK(fan.edge_distances({0, 1})[0] >= 0);
    CHECK_FALSE(fan.edge_parent({0, 1}, {0, 1}).has_value());
}

TEST_CASE("decompose base and pigeonhole cases") {
    // n = ell+2: the whole graph qualifies via uv = xy.
    OuterplaneGraph og = random_maximal_outerplanar(12, 7);
    SplitSubgraph h = decompose(og, 10, {0, 1});
    CHECK(h.vertices.size() == 12);

    CHECK_THROWS_AS(decompose(og, 11, {0, 1}), TooSmall);
}

TEST_CASE("decompose returns h within [ell+2, 2ell+1] over random instances") {
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        OuterplaneGraph og = random_maximal_outerplanar(50, seed ^ 0x9e3779b9ULL);
        SplitSubgraph h = decompose(og, 10, {0, 1});
        int sz = h.vertices.size();
        CHECK(sz >= 12);
        CHECK(sz <= 21);
        // A genuine split side of an edge of og.
        auto [lo, hi] = og.split(h.u, h.v);
        bool matches = lo.vertices == h.vertices || hi.vertices == h.vertices;
        CHECK(matches);
        // If uv != xy, H avoids the edge xy = (0,1).
        if (!(h.u == 0 && h.v == 1)) {
            bool contains_xy_edge = h.vertices.contains(0) && h.vertices.contains(1);
            CHECK_FALSE(contains_xy_edge);
        }
    }
}

TEST_CASE("decompose exhaustive over small triangulations") {
    for (int n = 3; n <= 9; ++n) {
        enumerate_polygon_triangulations(n, [&](const OuterplaneGraph& og) {
            for (int ell = 1; ell <= 3; ++ell) {
                if (n < ell + 2) continue;
                for (int x = 0; x < n; ++x) {
                    Edge xy{x, (x + 1) % n};
                    SplitSubgraph h = decompose(og, ell, xy);
                    CHECK(h.vertices.size() >= ell + 2);
                    CHECK(h.vertices.size() <= 2 * ell + 1);
                    int a = std::min(xy.first, xy.second), b = std::max(xy.first, xy.second);
                    if (!(h.u == a && h.v == b)) {
                        bool contains_xy = h.vertices.contains(a) && h.vertices.contains(b);
                        CHECK_FALSE(contains_xy);
                    }
                }
            }
        });
    }
}

TEST_CASE("decompose with small ell exercises the recursion") {
    for (uint64_t seed = 0; seed < 300; ++seed) {
        int n = 8 + static_cast<int>(seed % 20);
        OuterplaneGraph og = random_maximal_outerplanar(n, seed * 31 + 5);
        for (int ell = 1; ell <= 4; ++ell) {
            if (n < ell + 2) continue;
            SplitSubgraph h = decompose(og, ell, {0, 1});
            CHECK(h.vertices.size() >= ell + 2);
            CHECK(h.vertices.size() <= 2 * ell + 1);
        }
    }
}

TEST_CASE("outerpath recognition") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        OuterplaneGraph og = random_maximal_outerpath(20, seed);
        CHECK(og.is_outerpath());
        CHECK(static_cast<int>(og.chords().size()) == 17);
    }
    // A triangulation with an interior degree-3 dual node is not an outerpath.
    OuterplaneGraph star(6, {{0, 2}, {2, 4}, {0, 4}});
    CHECK_FALSE(star.is_outerpath());
}
