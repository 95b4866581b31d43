#include "doctest.h"

#include "kstab/exact_oracle.hpp"
#include "kstab/families.hpp"
#include "kstab/outerpath_solver.hpp"

using namespace kstab;

namespace {

// Fan triangulation of the n-gon: chords from vertex 0.
OuterplaneGraph fan(int n) {
    std::vector<Edge> chords;
    for (int i = 2; i <= n - 2; ++i) chords.emplace_back(0, i);
    return OuterplaneGraph(n, chords);
}

void check_guarantee(const OuterplaneGraph& og, int k) {
    Certificate c = solve_outerpath(og, k);
    CHECK(verify_kstable(og.graph(), c.set, k));
    CHECK(static_cast<long long>(c.achieved_size) * k >= static_cast<long long>(k - 1) * og.n());
}

}  // namespace

TEST_CASE("small bases keep all or all-but-one vertices") {
    // n <= k: the whole vertex set.
    OuterplaneGraph tri(3, {});
    Certificate c = solve_outerpath(tri, 3);
    CHECK(c.set.size() == 3);

    // n = k+1: all but one vertex.
    Certificate c2 = solve_outerpath(fan(4), 3);
    CHECK(c2.set.size() == 3);

    CHECK_THROWS_AS(solve_outerpath(fan(6), 2), KTooSmall);
    OuterplaneGraph nonpath(6, {{0, 2}, {2, 4}, {0, 4}});
    CHECK_THROWS_AS(solve_outerpath(nonpath, 3), NotOuterpath);
}

TEST_CASE("grow_front cuts at the first step when the special vertex has high degree") {
    // Fan F7 from an extreme face at the apex side: the apex has degree 6.
    OuterplaneGraph f7 = fan(7);
    ActiveFront front = init_front(f7);
    int k = 3;
    GrowResult r = grow_front(front, f7, k);
    // The front starts on an outer edge of an extreme face; the fan apex
    // absorbs everything, so a cut happens immediately with |gl| in [k, k+1].
    REQUIRE(std::holds_alternative<GrowCut>(r));
    GrowCut cut = std::get<GrowCut>(r);
    CHECK(cut.gl.size() >= k);
    CHECK(f7.has_edge(cut.wz.first, cut.wz.second));
    CHECK_FALSE(cut.gl.contains(cut.wz.first));
    CHECK_FALSE(cut.gl.contains(cut.wz.second));
}

TEST_CASE("initial front on a slow-growing zigzag continues") {
    // Zigzag outerpath: both endpoints of the special edge have degree <= 3,
    // so the first absorption keeps |gl| <= k+1 for k = 5.
    OuterplaneGraph zz = random_maximal_outerpath(12, 1);
    ActiveFront front = init_front(zz);
    GrowResult r = grow_front(front, zz, 5);
    CHECK(std::holds_alternative<GrowContinue>(r));
}

TEST_CASE("exhaustive outerpaths n <= 12, all k in 3..8, against the oracle") {
    for (int n = 3; n <= 12; ++n) {
        enumerate_polygon_triangulations(n, [&](const OuterplaneGraph& og) {
            if (!og.is_outerpath()) return;
            for (int k = 3; k <= 8; ++k) {
                Certificate c = solve_outerpath(og, k);
                REQUIRE(verify_kstable(og.graph(), c.set, k));
                REQUIRE(static_cast<long long>(c.achieved_size) * k >=
                        static_cast<long long>(k - 1) * n);
                if (k == 3 && n <= 10) {
                    auto [opt, stats] = exact_max_kstable(og.graph(), k);
                    REQUIRE(stats.proven_optimal);
                    REQUIRE(c.achieved_size <= opt.size());
                }
            }
        });
    }
}

TEST_CASE("special vertex keeps at most k-1 selected neighbors") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        OuterplaneGraph og = random_maximal_outerpath(40, seed);
        for (int k : {3, 4, 5}) {
            ActiveFront front = init_front(og);
            Certificate c = solve_outerpath(og, k);
            int u = front.special_vertex;
            if (c.set.contains(u)) {
                int d = 0;
                for (int w : og.graph().neighbors(u))
                    if (c.set.contains(w)) ++d;
                CHECK(d <= k - 1);
            }
        }
    }
}

TEST_CASE("randomized sizes up to 500") {
    for (int n : {20, 50, 120, 500}) {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            OuterplaneGraph og = random_maximal_outerpath(n, seed * 1009 + n);
            for (int k = 3; k <= 8; ++k) check_guarantee(og, k);
        }
    }
}

TEST_CASE("family instance completed to maximal solves within its window") {
    FamilyInstance inst = gen_outerpath_ub(18, 3);
    OuterplaneGraph og = complete_to_maximal(inst.graph, inst.outer_order);
    Certificate c = solve_outerpath(og, 3);
    CHECK(c.achieved_size >= 12);
    CHECK(c.achieved_size <= 14);  // oracle max from the family's upper bound
    // The certificate speaks in the original graph's ids.
    CHECK(verify_kstable(inst.graph, c.set, 3));
}
