#include "doctest.h"

#include <map>

#include "kstab/exact_oracle.hpp"
#include "kstab/families.hpp"
#include "kstab/json_io.hpp"
#include "kstab/outerplane.hpp"

using namespace kstab;

TEST_CASE("outerpath family structure at n=18, k=3") {
    FamilyInstance inst = gen_outerpath_ub(18, 3);
    CHECK(inst.h == 6);
    CHECK(inst.graph.n() == 18);
    CHECK(inst.graph.m() == 2 * 18 - 3);  // already maximal, no fillers
    CHECK(inst.fillers.empty());
    OuterplaneGraph og = complete_to_maximal(inst.graph, inst.outer_order);
    CHECK(og.is_outerpath());
    CHECK(inst.claimed_upper_bound == Rational(2 * 18 + 6, 3));  // (k-1)/k*n + 2 = 14
}

TEST_CASE("outerpath family smallest block and fillers") {
    FamilyInstance tiny = gen_outerpath_ub(3, 3);
    CHECK(tiny.h == 1);
    CHECK(tiny.graph.m() == 3);  // v1,u1,u2 triangle

    FamilyInstance padded = gen_outerpath_ub(20, 3);
    CHECK(padded.fillers.size() == 2);
    CHECK(padded.graph.degree(18) == 0);
    CHECK(padded.graph.degree(19) == 0);
    OuterplaneGraph og = complete_to_maximal(padded.graph, padded.outer_order);
    CHECK(og.is_outerpath());  // fillers triangulate into an extreme face
}

TEST_CASE("outerpath family oracle window at n=18 (tightness both sides)") {
    FamilyInstance inst = gen_outerpath_ub(18, 3);
    auto [set, stats] = exact_max_kstable(inst.graph, 3);
    REQUIRE(stats.proven_optimal);
    CHECK(set.size() >= 12);  // (k-1)/k * n
    CHECK(set.size() <= 14);  // + 2
}

TEST_CASE("planar family A matches the n=21 figure parameters") {
    FamilyInstance inst = gen_planar_ub_a(21, 3);
    CHECK(inst.h == 3);
    CHECK(inst.graph.n() == 21);
    CHECK(inst.fillers.empty());
    // Apexes w1,w3,w5 are ids 18,19,20; w3 sees 4 spine + 4 fan vertices.
    CHECK(inst.graph.degree(19) == 8);
    CHECK(inst.claimed_upper_bound == Rational(4 * 21 + 35, 7));
}

TEST_CASE("planar family B windows") {
    FamilyInstance inst = gen_planar_ub_b(21, 3);
    CHECK(inst.h == 3);
    CHECK(inst.graph.n() == 21);
    // Cycle of 15 plus three pairs, each adjacent to k+2 = 5 cycle vertices.
    for (int i = 0; i < 3; ++i) {
        CHECK(inst.graph.degree(15 + 2 * i) == 5);
        CHECK(inst.graph.degree(15 + 2 * i + 1) == 5);
    }
    CHECK_THROWS_AS(gen_planar_ub_b(8, 3), ParamsTooSmall);
}

TEST_CASE("greedy adversary family is 4-regular") {
    for (int n : {6, 8, 10, 12, 20, 34, 48}) {
        FamilyInstance inst = gen_greedy_adversary(n);
        CHECK(inst.graph.n() == n);
        for (int v = 0; v < n; ++v) CHECK(inst.graph.degree(v) == 4);
    }
    CHECK_THROWS_AS(gen_greedy_adversary(5), ParamsTooSmall);
    CHECK_THROWS_AS(gen_greedy_adversary(4), ParamsTooSmall);
}

TEST_CASE("random triangulations: counts, chords, uniformity") {
    // n=4 has C_2 = 2 triangulations, roughly equidistributed.
    std::map<std::vector<Edge>, int> freq4;
    for (uint64_t seed = 0; seed < 10000; ++seed)
        freq4[random_maximal_outerplanar(4, seed).chords()]++;
    CHECK(freq4.size() == 2);
    for (const auto& [chords, count] : freq4) CHECK(std::abs(count - 5000) < 400);

    std::map<std::vector<Edge>, int> freq5;
    for (uint64_t seed = 0; seed < 10000; ++seed)
        freq5[random_maximal_outerplanar(5, seed ^ 0xabcdef).chords()]++;
    CHECK(freq5.size() == 5);
    // Chi-square against uniform 2000 per cell, 4 dof; 18.47 is the 0.1% cut.
    double chi2 = 0;
    for (const auto& [chords, count] : freq5) chi2 += (count - 2000.0) * (count - 2000.0) / 2000.0;
    CHECK(chi2 < 18.47);

    std::map<std::vector<Edge>, int> freq6;
    for (uint64_t seed = 0; seed < 5000; ++seed)
        freq6[random_maximal_outerplanar(6, seed * 17 + 3).chords()]++;
    CHECK(freq6.size() == 14);

    for (uint64_t seed = 0; seed < 50; ++seed)
        CHECK(random_maximal_outerplanar(12, seed).chords().size() == 9);
}

TEST_CASE("random outerpath walks") {
    for (uint64_t seed = 0; seed < 10000; ++seed) {
        OuterplaneGraph og = random_maximal_outerpath(10, seed);
        if (seed < 200) CHECK(og.is_outerpath());
        CHECK(og.chords().size() == 7);
    }
}

TEST_CASE("apollonian triangulations") {
    Graph k4 = random_planar_triangulation(4, 0);
    CHECK(k4.m() == 6);
    for (uint64_t seed = 0; seed < 30; ++seed) {
        int n = 4 + static_cast<int>(seed % 40);
        Graph g = random_planar_triangulation(n, seed);
        CHECK(g.m() == 3LL * n - 6);
        int mind = n;
        for (int v = 0; v < n; ++v) mind = std::min(mind, g.degree(v));
        CHECK(mind >= 3);
    }
}

TEST_CASE("generators are deterministic in their parameters") {
    CHECK(random_maximal_outerplanar(20, 42).chords() == random_maximal_outerplanar(20, 42).chords());
    CHECK(random_planar_triangulation(30, 7).edge_list() == random_planar_triangulation(30, 7).edge_list());
    CHECK(gen_outerpath_ub(17, 4).graph.edge_list() == gen_outerpath_ub(17, 4).graph.edge_list());
}

TEST_CASE("family instances round-trip through JSON") {
    FamilyInstance inst = gen_outerpath_ub(14, 3);
    GraphRecord rec;
    rec.graph = inst.graph;
    rec.outer_order = inst.outer_order;
    GraphRecord back = parse_graph(serialize_graph(rec));
    CHECK(back.graph == inst.graph);
    REQUIRE(back.outer_order.has_value());
    CHECK(*back.outer_order == inst.outer_order);
}
