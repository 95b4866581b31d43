#include "kstab/families.hpp"

#include <array>

#include "kstab/rng.hpp"

namespace kstab {

namespace {

// Shared spine-and-fans core of the outerpath upper-bound family, also reused
// by the first planar family. Block i (1-based) occupies ids
// (i-1)*k .. i*k-1: the spine vertex v_i first, then the fan u^i_1..u^i_{k-1}.
struct SpineFamily {
    int h = 0;
    int k = 0;
    std::vector<Edge> edges;

    int v(int i) const { return (i - 1) * k; }             // 1 <= i <= h
    int u(int i, int j) const { return (i - 1) * k + j; }  // 1 <= j <= k-1

    SpineFamily(int h_, int k_) : h(h_), k(k_) {
        for (int i = 1; i < h; ++i) edges.emplace_back(v(i), v(i + 1));
        for (int i = 1; i <= h; ++i) {
            for (int j = 1; j + 1 <= k - 1; ++j) edges.emplace_back(u(i, j), u(i, j + 1));
            for (int j = 1; j <= k - 1; ++j) edges.emplace_back(v(i), u(i, j));
            if (i >= 2) edges.emplace_back(v(i - 1), u(i, 1));
            if (i + 1 <= h) edges.emplace_back(u(i, k - 1), v(i + 1));
        }
    }

    // Cyclic outer order of the zigzag drawing: fans of odd blocks above the
    // spine, fans of even blocks below.
    std::vector<int> outer_order() const {
        std::vector<int> order;
        if (h == 0) return order;
        order.push_back(v(1));
        for (int i = 1; i <= h; i += 2) {
            for (int j = 1; j <= k - 1; ++j) order.push_back(u(i, j));
            if (i + 1 <= h)
                order.push_back(v(i + 1));
            else if (i == h && h > 1)
                order.push_back(v(h));
        }
        int start = (h % 2 == 0) ? h : h - 1;
        for (int i = start; i >= 2; i -= 2) {
            for (int j = k - 1; j >= 1; --j) order.push_back(u(i, j));
            if (i > 2) order.push_back(v(i - 1));
        }
        return order;
    }
};

std::vector<int> append_fillers_after_spine_head(std::vector<int> order, int core_n, int n) {
    // Fillers sit between v_1 and u^1_1 so that completing to maximal keeps
    // the weak dual a path (they triangulate into the extreme face there).
    std::vector<int> out;
    if (order.empty()) {
        for (int v = 0; v < n; ++v) out.push_back(v);
        return out;
    }
    out.push_back(order[0]);
    for (int f = core_n; f < n; ++f) out.push_back(f);
    out.insert(out.end(), order.begin() + 1, order.end());
    return out;
}

}  // namespace

FamilyInstance gen_outerpath_ub(int n, int k) {
    KSTAB_CHECK(n >= 1 && k >= 3, "need n >= 1, k >= 3");
    int h = n / k;
    SpineFamily core(h, k);
    FamilyInstance inst;
    inst.family_id = "outerpath-ub";
    inst.n = n;
    inst.k = k;
    inst.h = h;
    inst.graph = Graph::from_edges(n, core.edges);
    // The maximum k-stable set keeps everything but the h-2 interior spine
    // vertices, so the bound is the integer ceil((k-1)n/k) + 2 (equal to
    // (k-1)/k*n + 2 whenever k divides n).
    inst.claimed_upper_bound =
        Rational(Rational((k - 1) * static_cast<long long>(n), k).ceil() + 2);
    for (int f = h * k; f < n; ++f) inst.fillers.push_back(f);
    inst.outer_order = append_fillers_after_spine_head(core.outer_order(), h * k, n);
    return inst;
}

FamilyInstance gen_planar_ub_a(int n, int k) {
    KSTAB_CHECK(n >= 1 && k >= 3, "need n >= 1, k >= 3");
    int h = n / (2 * k + 1);
    SpineFamily core(2 * h, k);
    std::vector<Edge> edges = core.edges;
    int wbase = 2 * h * k;  // w_{2i-1} has id wbase + (i-1)
    for (int i = 1; i <= h; ++i) {
        int w = wbase + (i - 1);
        if (i > 1) edges.emplace_back(w, core.v(2 * i - 2));
        edges.emplace_back(w, core.v(2 * i - 1));
        edges.emplace_back(w, core.v(2 * i));
        if (i < h) edges.emplace_back(w, core.v(2 * i + 1));
        for (int j = 1; j <= k - 1; ++j) {
            edges.emplace_back(w, core.u(2 * i - 1, j));
            edges.emplace_back(w, core.u(2 * i, j));
        }
    }
    FamilyInstance inst;
    inst.family_id = "planar-ub-a";
    inst.n = n;
    inst.k = k;
    inst.h = h;
    inst.graph = Graph::from_edges(n, edges);
    inst.claimed_upper_bound =
        Rational((2 * k - 2) * static_cast<long long>(n) + 5 * (2 * k + 1), 2 * k + 1);
    for (int f = h * (2 * k + 1); f < n; ++f) inst.fillers.push_back(f);
    return inst;
}

FamilyInstance gen_planar_ub_b(int n, int k) {
    KSTAB_CHECK(k >= 3, "need k >= 3");
    if (n < k + 6) throw ParamsTooSmall("gen_planar_ub_b needs n >= k+6");
    int h = n / (k + 4);
    int c = n - 2 * h;  // cycle length
    std::vector<Edge> edges;
    for (int j = 0; j < c; ++j) edges.emplace_back(j, (j + 1) % c);
    for (int i = 1; i <= h; ++i) {
        int vi = c + 2 * (i - 1), wi = vi + 1;
        for (int j = (i - 1) * (k + 2); j < i * (k + 2); ++j) {
            edges.emplace_back(vi, j);
            edges.emplace_back(wi, j);
        }
    }
    FamilyInstance inst;
    inst.family_id = "planar-ub-b";
    inst.n = n;
    inst.k = k;
    inst.h = h;
    inst.graph = Graph::from_edges(n, edges);
    inst.claimed_upper_bound = Rational((k + 2) * static_cast<long long>(n) + 2 * (k + 4), k + 4);
    return inst;
}

namespace {

// Stack of L octahedron layers: rings r_1..r_L of 4 vertices plus two apexes,
// 4-regular and planar. The ring vertices with even (pos + ring) form an
// independent set of size 2L that an adversarial greedy can remove entirely.
// Ids: that class first (lowest), the other ring class next, apexes last.
void emit_bipyramid(int rings, std::vector<Edge>& edges, int& next_class0, int& next_class1,
                    int& next_apex, std::vector<std::vector<int>>& ids_out) {
    std::vector<std::vector<int>> id(static_cast<size_t>(rings + 1), std::vector<int>(4, -1));
    for (int j = 1; j <= rings; ++j)
        for (int pos = 0; pos < 4; ++pos)
            id[static_cast<size_t>(j)][static_cast<size_t>(pos)] =
                ((pos + j) % 2 == 0) ? next_class0++ : next_class1++;
    int t = next_apex++, b = next_apex++;
    for (int j = 1; j <= rings; ++j)
        for (int pos = 0; pos < 4; ++pos) {
            edges.emplace_back(id[static_cast<size_t>(j)][static_cast<size_t>(pos)],
                               id[static_cast<size_t>(j)][static_cast<size_t>((pos + 1) % 4)]);
            if (j + 1 <= rings)
                edges.emplace_back(id[static_cast<size_t>(j)][static_cast<size_t>(pos)],
                                   id[static_cast<size_t>(j + 1)][static_cast<size_t>(pos)]);
        }
    for (int pos = 0; pos < 4; ++pos) {
        edges.emplace_back(t, id[1][static_cast<size_t>(pos)]);
        edges.emplace_back(b, id[static_cast<size_t>(rings)][static_cast<size_t>(pos)]);
    }
    ids_out = std::move(id);
}

}  // namespace

FamilyInstance gen_greedy_adversary(int n) {
    if (n < 6 || n % 2 != 0) throw ParamsTooSmall("gen_greedy_adversary needs even n >= 6");
    FamilyInstance inst;
    inst.family_id = "greedy-adv";
    inst.n = n;
    inst.k = 3;
    inst.claimed_upper_bound = Rational(n);
    std::vector<Edge> edges;
    if (n == 8) {
        // Antiprism; too small for the layered construction, and the n/2 - 4
        // target is vacuous here.
        for (int i = 0; i < 4; ++i) {
            edges.emplace_back(i, (i + 1) % 4);
            edges.emplace_back(4 + i, 4 + (i + 1) % 4);
            edges.emplace_back(i, 4 + i);
            edges.emplace_back(i, 4 + (i + 1) % 4);
        }
        inst.graph = Graph::from_edges(n, edges);
        return inst;
    }
    std::vector<int> ring_counts;
    if (n % 4 == 2) {
        ring_counts.push_back((n - 2) / 4);
    } else {
        ring_counts.push_back(1);
        ring_counts.push_back((n - 8) / 4);
    }
    int total_rings = 0;
    for (int r : ring_counts) total_rings += r;
    int next_class0 = 0, next_class1 = 2 * total_rings, next_apex = 4 * total_rings;
    for (int r : ring_counts) {
        std::vector<std::vector<int>> ids;
        emit_bipyramid(r, edges, next_class0, next_class1, next_apex, ids);
    }
    inst.h = total_rings;
    inst.graph = Graph::from_edges(n, edges);
    return inst;
}

OuterplaneGraph random_maximal_outerplanar(int n, uint64_t seed) {
    KSTAB_CHECK(n >= 3, "need n >= 3");
    // Remy's procedure: a uniform full binary tree with n-2 internal nodes,
    // then the classic bijection with polygon triangulations.
    Rng rng(seed);
    int internal_target = n - 2;
    struct Node {
        int child[2] = {-1, -1};
    };
    std::vector<Node> nodes;
    nodes.emplace_back();  // node 0: initial leaf
    int root = 0;
    std::vector<int> parent(1, -1), side(1, 0);
    for (int s = 0; s < internal_target; ++s) {
        int count = static_cast<int>(nodes.size());
        int x = static_cast<int>(rng.below(static_cast<uint64_t>(count)));
        int d = rng.coin() ? 1 : 0;
        int y = static_cast<int>(nodes.size());
        nodes.emplace_back();
        parent.push_back(-1);
        side.push_back(0);
        int z = static_cast<int>(nodes.size());
        nodes.emplace_back();
        parent.push_back(-1);
        side.push_back(0);
        int px = parent[static_cast<size_t>(x)];
        if (px == -1) {
            root = y;
        } else {
            nodes[static_cast<size_t>(px)].child[side[static_cast<size_t>(x)]] = y;
            parent[static_cast<size_t>(y)] = px;
            side[static_cast<size_t>(y)] = side[static_cast<size_t>(x)];
        }
        nodes[static_cast<size_t>(y)].child[d] = z;
        nodes[static_cast<size_t>(y)].child[1 - d] = x;
        parent[static_cast<size_t>(z)] = y;
        side[static_cast<size_t>(z)] = d;
        parent[static_cast<size_t>(x)] = y;
        side[static_cast<size_t>(x)] = 1 - d;
    }
    // Leaf i (in-order) is the boundary edge (i, i+1); an internal node over
    // leaves lo..hi is the polygon edge (lo, hi+1) and splits at its left
    // subtree into the triangle (lo, mid+1, hi+1).
    std::vector<Edge> chords;
    // Compute leaf spans iteratively.
    std::vector<int> leaf_count(nodes.size(), 0);
    {
        std::vector<std::pair<int, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [v, done] = stack.back();
            stack.pop_back();
            if (nodes[static_cast<size_t>(v)].child[0] == -1) {
                leaf_count[static_cast<size_t>(v)] = 1;
                continue;
            }
            if (!done) {
                stack.push_back({v, true});
                stack.push_back({nodes[static_cast<size_t>(v)].child[0], false});
                stack.push_back({nodes[static_cast<size_t>(v)].child[1], false});
            } else {
                leaf_count[static_cast<size_t>(v)] =
                    leaf_count[static_cast<size_t>(nodes[static_cast<size_t>(v)].child[0])] +
                    leaf_count[static_cast<size_t>(nodes[static_cast<size_t>(v)].child[1])];
            }
        }
    }
    {
        std::vector<std::pair<int, int>> stack{{root, 0}};  // (node, lo)
        while (!stack.empty()) {
            auto [v, lo] = stack.back();
            stack.pop_back();
            const Node& nd = nodes[static_cast<size_t>(v)];
            if (nd.child[0] == -1) continue;
            int hi = lo + leaf_count[static_cast<size_t>(v)] - 1;
            if (v != root && hi + 1 - lo >= 2) chords.emplace_back(lo, hi + 1);
            int mid = lo + leaf_count[static_cast<size_t>(nd.child[0])] - 1;
            stack.push_back({nd.child[0], lo});
            stack.push_back({nd.child[1], mid + 1});
        }
    }
    return OuterplaneGraph(n, std::move(chords));
}

OuterplaneGraph random_maximal_outerpath(int n, uint64_t seed) {
    KSTAB_CHECK(n >= 3, "need n >= 3");
    Rng rng(seed);
    std::vector<Edge> chords;
    int a = 0, b = n - 1;
    while (b - a >= 2) {
        if (rng.coin()) {
            if (b - (a + 1) >= 2) chords.emplace_back(a + 1, b);
            ++a;
        } else {
            if ((b - 1) - a >= 2) chords.emplace_back(a, b - 1);
            --b;
        }
    }
    return OuterplaneGraph(n, std::move(chords));
}

Graph random_planar_triangulation(int n, uint64_t seed) {
    KSTAB_CHECK(n >= 4, "need n >= 4");
    Rng rng(seed);
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int v = 4; v < n; ++v) {
        size_t f = static_cast<size_t>(rng.below(faces.size()));
        auto [x, y, z] = faces[f];
        edges.emplace_back(v, x);
        edges.emplace_back(v, y);
        edges.emplace_back(v, z);
        faces[f] = {x, y, v};
        faces.push_back({x, z, v});
        faces.push_back({y, z, v});
    }
    return Graph::from_edges(n, edges);
}

}  // namespace kstab
