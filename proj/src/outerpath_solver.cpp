#include "kstab/outerpath_solver.hpp"

#include <array>

namespace kstab {

namespace {

bool is_outer_edge(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    return b - a == 1 || (a == 0 && b == n - 1);
}

int count_outside(const OuterplaneGraph& og, int v, const VertexSet& gl) {
    int c = 0;
    for (int w : og.graph().neighbors(v))
        if (!gl.contains(w)) ++c;
    return c;
}

// Endpoint choice shared by the initial and post-step fronts: prefer the
// endpoint with >= 2 neighbors outside gl, then >= 1, then the lower id.
int pick_active(const OuterplaneGraph& og, Edge e, const VertexSet& gl) {
    int a = std::min(e.first, e.second), b = std::max(e.first, e.second);
    int ca = count_outside(og, a, gl), cb = count_outside(og, b, gl);
    if (ca >= 2 && cb < 2) return a;
    if (cb >= 2 && ca < 2) return b;
    if (ca >= 2 && cb >= 2) return a;  // not expected on the frontier; keep deterministic
    if (ca >= 1 && cb < 1) return a;
    if (cb >= 1 && ca < 1) return b;
    return a;
}

ActiveFront make_front(const OuterplaneGraph& og, Edge special, int special_vertex) {
    ActiveFront f;
    f.special_edge = special;
    f.special_vertex = special_vertex;
    f.gl = VertexSet({special.first, special.second});
    f.active_edge = special;
    f.active_vertex = pick_active(og, special, f.gl);
    return f;
}

}  // namespace

ActiveFront init_front(const OuterplaneGraph& og) {
    KSTAB_CHECK(og.n() >= 3, "front needs n >= 3");
    WeakDual d = og.weak_dual();
    // Extreme face containing the lowest vertex id; ties by sorted triple.
    int best = -1;
    std::array<int, 3> best_key{};
    for (size_t f = 0; f < d.faces.size(); ++f) {
        if (d.adj[f].size() > 1) continue;
        std::array<int, 3> key{d.faces[f].a, d.faces[f].b, d.faces[f].c};
        std::sort(key.begin(), key.end());
        if (best == -1 || key < best_key) {
            best = static_cast<int>(f);
            best_key = key;
        }
    }
    KSTAB_CHECK(best >= 0, "weak dual has no extreme face");
    const auto& fc = d.faces[static_cast<size_t>(best)];
    Edge special{-1, -1};
    const std::array<Edge, 3> cand{{{fc.a, fc.b}, {fc.b, fc.c}, {fc.a, fc.c}}};
    for (const auto& e : cand) {
        if (!is_outer_edge(e.first, e.second, og.n())) continue;
        if (special.first == -1 || e < special) special = e;
    }
    KSTAB_CHECK(special.first >= 0, "extreme face has no outer edge");
    return make_front(og, special, std::min(special.first, special.second));
}

namespace {

// Distances of every edge from a level's special edge, computed once per
// level and shared across grow steps.
struct DistanceCache {
    std::vector<Edge> edges;
    std::vector<int> dist;

    DistanceCache(const OuterplaneGraph& og, Edge special)
        : edges(og.graph().edge_list()), dist(og.edge_distances(special)) {}
};

GrowResult grow_front_cached(const ActiveFront& front, const OuterplaneGraph& og, int k,
                             const DistanceCache& cache) {
    const Graph& g = og.graph();
    int s = front.active_vertex;
    VertexSet gl = front.gl;
    for (int w : g.neighbors(s)) gl.insert(w);

    // Farthest adjacent pair among s's neighbors, distances measured from the
    // special edge; ties lexicographic.
    int best_d = -1;
    Edge best{-1, -1};
    const auto& nbrs = g.neighbors(s);
    for (size_t i = 0; i < cache.edges.size(); ++i) {
        auto [x, y] = cache.edges[i];
        if (!std::binary_search(nbrs.begin(), nbrs.end(), x) ||
            !std::binary_search(nbrs.begin(), nbrs.end(), y))
            continue;
        int dd = cache.dist[i];
        if (dd > best_d || (dd == best_d && cache.edges[i] < best)) {
            best_d = dd;
            best = cache.edges[i];
        }
    }
    KSTAB_CHECK(best.first >= 0, "active vertex has no adjacent neighbor pair");

    if (gl.size() <= k + 1) {
        ActiveFront next;
        next.gl = gl;
        next.special_edge = front.special_edge;
        next.special_vertex = front.special_vertex;
        next.active_edge = best;
        next.active_vertex = pick_active(og, best, gl);
        return GrowContinue{next};
    }
    gl.erase(best.first);
    gl.erase(best.second);
    return GrowCut{s, best, gl};
}

}  // namespace

GrowResult grow_front(const ActiveFront& front, const OuterplaneGraph& og, int k) {
    DistanceCache cache(og, front.special_edge);
    return grow_front_cached(front, og, k, cache);
}

Certificate solve_outerpath(const OuterplaneGraph& og, int k) {
    if (k < 3) throw KTooSmall("solve_outerpath needs k >= 3");
    if (!og.is_outerpath()) throw NotOuterpath("weak dual is not a path");

    // Work on a positions-as-ids copy; translate to labels at the end.
    std::vector<int> picked;
    OuterplaneGraph cur(og.n(), og.chords());
    bool first_level = true;
    Edge carry_special{-1, -1};
    int carry_special_vertex = -1;
    for (;;) {
        int n = cur.n();
        if (n <= k) {
            for (int p = 0; p < n; ++p) picked.push_back(cur.label(p));
            break;
        }
        if (n == k + 1) {
            int drop = 0;
            for (int p = 1; p < n; ++p)
                if (cur.label(p) > cur.label(drop)) drop = p;
            for (int p = 0; p < n; ++p)
                if (p != drop) picked.push_back(cur.label(p));
            break;
        }
        ActiveFront front = first_level ? init_front(cur)
                                        : make_front(cur, carry_special, carry_special_vertex);
        first_level = false;
        DistanceCache cache(cur, front.special_edge);
        GrowCut cut{-1, {-1, -1}, {}};
        for (;;) {
            GrowResult r = grow_front_cached(front, cur, k, cache);
            if (std::holds_alternative<GrowContinue>(r)) {
                front = std::get<GrowContinue>(r).front;
                continue;
            }
            cut = std::get<GrowCut>(r);
            break;
        }
        KSTAB_CHECK(cut.gl.size() >= k, "G_L smaller than k at a cut");
        for (int p : cut.gl)
            if (p != cut.h) picked.push_back(cur.label(p));

        // Continue on the wz-side disjoint from the peeled part.
        auto [lo, hi] = cur.split(cut.wz.first, cut.wz.second);
        const SplitSubgraph* right = nullptr;
        if (lo.vertices.intersect(cut.gl).empty())
            right = &lo;
        else if (hi.vertices.intersect(cut.gl).empty())
            right = &hi;
        KSTAB_CHECK(right != nullptr, "no split side is disjoint from G_L");
        KSTAB_CHECK(right->vertices.size() == n - cut.gl.size(), "split does not partition");
        OuterplaneGraph next = cur.sub(*right);
        // The split edge is the closing edge locally; the special vertex is
        // the endpoint with more than two neighbors in G_R.
        carry_special = {0, next.n() - 1};
        int d0 = next.graph().degree(0), d1 = next.graph().degree(next.n() - 1);
        if (d0 >= 3 && d1 < 3)
            carry_special_vertex = 0;
        else if (d1 >= 3 && d0 < 3)
            carry_special_vertex = next.n() - 1;
        else
            carry_special_vertex = 0;
        cur = next;
    }

    VertexSet positions(std::move(picked));
    KSTAB_CHECK(max_induced_degree(og.graph(), positions) <= k,
                "outerpath solver produced a set exceeding degree k");
    Certificate cert;
    cert.k = k;
    cert.set = og.to_labels(positions);
    cert.algorithm = Algorithm::OuterpathLB;
    cert.guaranteed_size = Rational(static_cast<long long>(k - 1) * og.n(), k);
    cert.achieved_size = cert.set.size();
    KSTAB_CHECK(cert.achieved_size >= cert.guaranteed_size.ceil(),
                "outerpath solver fell short of its guarantee");
    return cert;
}

}  // namespace kstab
