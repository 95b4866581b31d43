// Acceptance suite: one test case per criterion, one printed line each.

#include "doctest.h"

#include <cstdio>
#include <set>

#include "kstab/exact_oracle.hpp"
#include "kstab/families.hpp"
#include "kstab/outerpath_solver.hpp"
#include "kstab/outerplanar_solver.hpp"
#include "kstab/planar_greedy.hpp"
#include "kstab/rng.hpp"

using namespace kstab;

namespace {

struct Criterion {
    const char* name;
    bool ok = true;
    bool completed = false;
    long long checks = 0;

    void expect(bool cond) {
        ++checks;
        if (!cond) ok = false;
        REQUIRE(cond);
    }
    void done() { completed = true; }
    ~Criterion() {
        bool pass = ok && completed;
        std::printf("ACCEPTANCE %-38s %s (%lld checks)\n", name, pass ? "PASS" : "FAIL", checks);
        std::fflush(stdout);
    }
};

// Random connected r-regular graph by the configuration model with rejection.
Graph random_regular_connected(int n, int r, uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) stubs.push_back(v);
        // Fisher-Yates, then pair consecutive stubs.
        for (size_t i = stubs.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(rng.below(i));
            std::swap(stubs[i - 1], stubs[j]);
        }
        std::vector<std::pair<int, int>> pairs;
        bool simple = true;
        std::set<std::pair<int, int>> seen;
        for (size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) simple = false;
            auto key = std::minmax(a, b);
            if (!seen.insert({key.first, key.second}).second) simple = false;
            pairs.emplace_back(a, b);
        }
        if (!simple) continue;
        Graph g = Graph::from_edges(n, {pairs.begin(), pairs.end()});
        if (g.connected_components().size() == 1) return g;
    }
    throw Error("failed to sample a connected regular graph");
}

Rational outerplanar_ratio(int k) {
    if (k == 3) return Rational(2, 3);
    if (k % 2 == 0) return Rational(2 * k + 1, 2 * k + 5);
    return Rational(3 * k + 1, 3 * k + 7);
}

}  // namespace

TEST_CASE("criterion 1: outerpath guarantee") {
    Criterion c{"1 outerpath-guarantee"};
    for (int n = 3; n <= 12; ++n) {
        enumerate_polygon_triangulations(n, [&](const OuterplaneGraph& og) {
            if (!og.is_outerpath()) return;
            for (int k = 3; k <= 8; ++k) {
                Certificate cert = solve_outerpath(og, k);
                c.expect(verify_kstable(og.graph(), cert.set, k));
                c.expect(static_cast<long long>(cert.achieved_size) >=
                         Rational(static_cast<long long>(k - 1) * n, k).ceil());
            }
        });
    }
    for (int n : {20, 50, 100, 200}) {
        for (uint64_t s = 0; s < 500; ++s) {
            OuterplaneGraph og = random_maximal_outerpath(n, derive_seed(1001, s * 1000 + n));
            for (int k = 3; k <= 8; ++k) {
                Certificate cert = solve_outerpath(og, k);
                c.expect(verify_kstable(og.graph(), cert.set, k));
                c.expect(static_cast<long long>(cert.achieved_size) >=
                         Rational(static_cast<long long>(k - 1) * n, k).ceil());
            }
        }
    }
    c.done();
}

TEST_CASE("criterion 2: outerpath family tightness") {
    Criterion c{"2 outerpath-family-tightness"};
    // Window: (k-1)/k*n <= opt <= ceil((k-1)/k*n) + 2. The oracle-proved
    // optimum is exactly n - floor(n/3) + 2 = ceil(2n/3) + 2 on this family,
    // so the additive constant sits on top of the integer lower bound.
    for (int n = 9; n <= 24; ++n) {
        FamilyInstance inst = gen_outerpath_ub(n, 3);
        auto [set, stats] = exact_max_kstable(inst.graph, 3);
        c.expect(stats.proven_optimal);
        c.expect(set.size() >= Rational(2 * n, 3).ceil());
        c.expect(set.size() <= Rational(2 * n, 3).ceil() + 2);
        c.expect(Rational(set.size()) <= inst.claimed_upper_bound);
    }
    c.done();
}

TEST_CASE("criterion 3: outerplanar k=3") {
    Criterion c{"3 outerplanar-k3"};
    for (int n = 3; n <= 12; ++n) {
        enumerate_polygon_triangulations(n, [&](const OuterplaneGraph& og) {
            OuterplanarRun run = solve_outerplanar_traced(og, 3);
            c.expect(verify_kstable(og.graph(), run.certificate.set, 3));
            c.expect(3 * run.certificate.achieved_size >= 2 * n);
            for (const auto& t : run.trace) c.expect(t.merge_ok);
        });
    }
    for (int n : {30, 100, 300}) {
        for (uint64_t s = 0; s < 300; ++s) {
            OuterplaneGraph og = random_maximal_outerplanar(n, derive_seed(1003, s * 1000 + n));
            OuterplanarRun run = solve_outerplanar_traced(og, 3);
            c.expect(verify_kstable(og.graph(), run.certificate.set, 3));
            c.expect(run.certificate.achieved_size >= Rational(2 * n, 3).ceil());
            for (const auto& t : run.trace) c.expect(t.merge_ok);
        }
    }
    c.done();
}

TEST_CASE("criterion 4: outerplanar k >= 4") {
    Criterion c{"4 outerplanar-k4plus"};
    for (int n : {50, 150}) {
        for (int k : {4, 5, 6, 7}) {
            for (uint64_t s = 0; s < 300; ++s) {
                OuterplaneGraph og =
                    random_maximal_outerplanar(n, derive_seed(1004, s * 10000 + n * 10 + k));
                Certificate cert = solve_outerplanar(og, k);
                c.expect(verify_kstable(og.graph(), cert.set, k));
                c.expect(cert.achieved_size >= (outerplanar_ratio(k) * Rational(n)).ceil());
            }
        }
    }
    c.done();
}

TEST_CASE("criterion 5: planar upper-bound families") {
    Criterion c{"5 planar-ub-families"};
    for (int n : {21, 26}) {
        int k = 3;
        FamilyInstance a = gen_planar_ub_a(n, k);
        auto [seta, statsa] = exact_max_kstable(a.graph, k);
        c.expect(statsa.proven_optimal);
        c.expect(seta.size() <= (Rational((2 * k - 2) * n, 2 * k + 1) + Rational(5)).floor());

        FamilyInstance b = gen_planar_ub_b(n, k);
        auto [setb, statsb] = exact_max_kstable(b.graph, k);
        c.expect(statsb.proven_optimal);
        c.expect(setb.size() <= (Rational((k + 2) * n, k + 4) + Rational(2)).floor());
    }
    c.done();
}

TEST_CASE("criterion 6: greedy removal bounds") {
    Criterion c{"6 greedy-removal-bounds"};
    for (int n : {100, 300, 500}) {
        for (uint64_t s = 0; s < 200; ++s) {
            Graph g = random_planar_triangulation(n, derive_seed(1006, s * 1000 + n));
            for (int k : {3, 4, 5, 6, 7}) {
                auto [cert, trace] = greedy_removal(g, k, Strategy::Best);
                c.expect(verify_kstable(g, cert.set, k));
                Rational bound = k == 3   ? Rational(5 * n + 2, 13)
                                 : k == 4 ? Rational(27 * n + 19, 59)
                                          : Rational((k - 2) * n + 6, k + 1);
                c.expect(cert.achieved_size >= bound.ceil());
            }
        }
    }
    // Eq. (1): r_4 <= 4/11 (n+6), asserted whenever the k=3 dominating-set
    // strategy ran with exact dominating sets on every component. Small
    // instances keep the components within the exact cap so the assertion
    // actually fires.
    long long eq1_checked = 0;
    for (uint64_t s = 0; s < 60; ++s) {
        int n = 24 + static_cast<int>(s % 16);
        Graph g = random_planar_triangulation(n, derive_seed(1061, s));
        auto [cert, trace] = greedy_removal(g, 3, Strategy::DominatingSet);
        bool all_exact = !trace.domset_components.empty();
        for (const auto& cd : trace.domset_components) all_exact = all_exact && cd.exact;
        if (!all_exact) continue;
        long long r4 =
            trace.removed_by_degree.count(4) ? trace.removed_by_degree.at(4) : 0;
        c.expect(Rational(r4) <= Rational(4 * (n + 6), 11));
        ++eq1_checked;
    }
    c.expect(eq1_checked > 10);
    c.done();
}

TEST_CASE("criterion 7: augmentation gadgets") {
    Criterion c{"7 augmentation-gadgets"};
    for (int r : {4, 5}) {
        int budget = r == 4 ? 6 : 7;
        for (int x = 1; x <= r; ++x) {
            std::vector<int> degs(static_cast<size_t>(x), std::max(0, x - 1));
            for (;;) {
                long long total_def = 0;
                for (int d : degs) total_def += r - d;
                bool feasible = (r == 4) ? (total_def % 2 == 0) : true;
                if (feasible) {
                    std::vector<int> ds;
                    for (int d : degs) ds.push_back(r - d);
                    auto gadget = find_gadget(ds, r, budget);
                    c.expect(gadget.has_value());
                    if (gadget) {
                        c.expect(gadget->t <= budget);
                        // Regularity ledger: every new vertex reaches degree
                        // exactly r; every residual receives its deficiency.
                        std::vector<int> ndeg(static_cast<size_t>(gadget->t), 0);
                        std::vector<int> rdeg(static_cast<size_t>(x), 0);
                        for (auto [res, nv] : gadget->attachments) {
                            ++ndeg[static_cast<size_t>(nv)];
                            ++rdeg[static_cast<size_t>(res)];
                        }
                        for (auto [a, b] : gadget->internal_edges) {
                            ++ndeg[static_cast<size_t>(a)];
                            ++ndeg[static_cast<size_t>(b)];
                        }
                        for (int i = 0; i < gadget->t; ++i)
                            c.expect(ndeg[static_cast<size_t>(i)] == r);
                        for (int j = 0; j < x; ++j)
                            c.expect(rdeg[static_cast<size_t>(j)] == ds[static_cast<size_t>(j)]);
                    }
                }
                int i = x - 1;
                while (i >= 0 && degs[static_cast<size_t>(i)] == r - 1) --i;
                if (i < 0) break;
                int v = ++degs[static_cast<size_t>(i)];
                for (int j = i + 1; j < x; ++j) degs[static_cast<size_t>(j)] = v;
            }
        }
    }
    c.done();
}

TEST_CASE("criterion 8: dominating-set targets") {
    Criterion c{"8 dominating-set-targets"};
    for (int r : {4, 5}) {
        int produced = 0;
        uint64_t s = 0;
        while (produced < 50) {
            int n = 10 + static_cast<int>(s % 21);
            if (static_cast<long long>(n) * r % 2 != 0 || n < r + 1) {
                ++s;
                continue;
            }
            Graph g = random_regular_connected(n, r, derive_seed(1008, s * 10 + r));
            ++s;
            auto [dom, stats] = exact_min_dominating(g);
            c.expect(stats.proven_optimal);
            long long cap = r == 4 ? 4LL * n / 11 : 5LL * n / 14;
            c.expect(dom.size() <= cap);
            ++produced;
        }
    }
    c.done();
}

TEST_CASE("criterion 9: adversary demonstration") {
    Criterion c{"9 greedy-adversary"};
    for (int n = 20; n <= 200; n += 2) {
        FamilyInstance inst = gen_greedy_adversary(n);
        auto [plain_cert, plain_trace] =
            greedy_removal(inst.graph, 3, Strategy::Plain, Tiebreak::Adversarial);
        c.expect(plain_trace.removed_total() >= n / 2 - 4);
        auto [best_cert, best_trace] = greedy_removal(inst.graph, 3, Strategy::Best);
        c.expect(best_cert.achieved_size >= Rational(7 * n - 24, 11).ceil());
    }
    c.done();
}

TEST_CASE("criterion 10: girth/bipartite corollary") {
    Criterion c{"10 girth-bipartite-corollary"};
    for (long long n : {13LL, 40LL, 77LL, 200LL}) {
        BoundReport rep = bound_calculator(n, 0, 6, 3, 4);
        c.expect(rep.value == Rational(20 * n, 39) - Rational(4, 39));
        c.expect(rep.value == Rational(20 * n - 4, 39));
    }
    // Bipartite planar instances: subdivide every edge of a triangulation.
    for (uint64_t s = 0; s < 40; ++s) {
        int base_n = 20 + static_cast<int>(s % 30);
        Graph tri = random_planar_triangulation(base_n, derive_seed(1010, s));
        std::vector<Edge> subdivided;
        int next = base_n;
        for (auto [u, v] : tri.edge_list()) {
            subdivided.emplace_back(u, next);
            subdivided.emplace_back(next, v);
            ++next;
        }
        Graph bip = Graph::from_edges(next, subdivided);
        long long n = bip.n();
        auto [cert, trace] = greedy_removal(bip, 3, Strategy::Best);
        c.expect(verify_kstable(bip, cert.set, 3));
        c.expect(cert.achieved_size >= Rational(20 * n - 4, 39).ceil());
    }
    c.done();
}
