#include "kstab/outerplane.hpp"

#include <map>
#include <queue>
#include <set>

namespace kstab {

namespace {

// Chords (a,c) and (b,d) cross iff their endpoints strictly interleave on the
// cycle: a < b < c < d after normalization.
bool chords_cross(Edge e, Edge f) {
    int a = std::min(e.first, e.second), c = std::max(e.first, e.second);
    int b = std::min(f.first, f.second), d = std::max(f.first, f.second);
    if (a == b || a == d || c == b || c == d) return false;
    return (a < b && b < c && c < d) || (b < a && a < d && d < c);
}

}  // namespace

bool WeakDual::is_path() const {
    for (size_t f = 0; f < faces.size(); ++f)
        if (adj[f].size() > 2) return false;
    return true;
}

OuterplaneGraph::OuterplaneGraph(int n, std::vector<Edge> chords, std::vector<int> labels)
    : n_(n), chords_(std::move(chords)), labels_(std::move(labels)) {
    KSTAB_CHECK(n_ >= 0, "negative n");
    for (auto& c : chords_) {
        if (c.first > c.second) std::swap(c.first, c.second);
        KSTAB_CHECK(c.first >= 0 && c.second < n_, "chord out of range");
        int gap = std::min(c.second - c.first, n_ - (c.second - c.first));
        if (gap < 2) throw NotMaximalOuterplanar("chord endpoints are cyclically adjacent");
    }
    std::sort(chords_.begin(), chords_.end());
    if (std::adjacent_find(chords_.begin(), chords_.end()) != chords_.end())
        throw NotMaximalOuterplanar("duplicate chord");
    for (size_t i = 0; i < chords_.size(); ++i)
        for (size_t j = i + 1; j < chords_.size(); ++j)
            if (chords_cross(chords_[i], chords_[j]))
                throw NotMaximalOuterplanar("crossing chords");
    if (n_ >= 3 && static_cast<int>(chords_.size()) != n_ - 3)
        throw NotMaximalOuterplanar("expected n-3 chords, got " + std::to_string(chords_.size()));
    if (n_ < 3 && !chords_.empty()) throw NotMaximalOuterplanar("chords on a degenerate graph");
    if (labels_.empty()) {
        labels_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) labels_[static_cast<size_t>(i)] = i;
    }
    KSTAB_CHECK(static_cast<int>(labels_.size()) == n_, "label table size mismatch");
    build_skeleton();
}

void OuterplaneGraph::build_skeleton() {
    std::vector<Edge> edges = chords_;
    if (n_ == 2) edges.emplace_back(0, 1);
    if (n_ >= 3) {
        for (int i = 0; i + 1 < n_; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(0, n_ - 1);
    }
    skeleton_ = Graph::from_edges(n_, edges);
}

VertexSet OuterplaneGraph::to_labels(const VertexSet& positions) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(positions.size()));
    for (int p : positions) out.push_back(label(p));
    return VertexSet(std::move(out));
}

int OuterplaneGraph::apex_inside(int a, int b) const {
    KSTAB_CHECK(a < b, "apex_inside expects a < b");
    for (int w : skeleton_.neighbors(a))
        if (w > a && w < b && skeleton_.has_edge(w, b)) return w;
    throw Error("no internal apex for edge");
}

int OuterplaneGraph::apex_outside(int a, int b) const {
    KSTAB_CHECK(a < b, "apex_outside expects a < b");
    for (int w : skeleton_.neighbors(a))
        if ((w < a || w > b) && skeleton_.has_edge(w, b)) return w;
    throw Error("no external apex for edge");
}

int OuterplaneGraph::face_apex_of_outer_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (b == a + 1) return apex_outside(a, b);
    KSTAB_CHECK(a == 0 && b == n_ - 1, "not an outer-cycle edge");
    return apex_inside(a, b);
}

std::pair<SplitSubgraph, SplitSubgraph> OuterplaneGraph::split(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || !skeleton_.has_edge(u, v)) throw EdgeAbsent("split edge not in graph");
    SplitSubgraph lo, hi;
    lo.u = hi.u = u;
    lo.v = hi.v = v;
    lo.lower_arc = true;
    hi.lower_arc = false;
    std::vector<int> a, b;
    for (int p = u; p <= v; ++p) a.push_back(p);
    for (int p = v; p != u; p = (p + 1) % n_) b.push_back(p);
    b.push_back(u);
    lo.vertices = VertexSet(std::move(a));
    hi.vertices = VertexSet(std::move(b));
    return {lo, hi};
}

OuterplaneGraph OuterplaneGraph::sub(const SplitSubgraph& side) const {
    // Arc in boundary order, starting at one split endpoint and ending at the
    // other, so the split edge is the closing edge (0, h-1) locally.
    std::vector<int> arc;
    if (side.lower_arc) {
        for (int p = side.u; p <= side.v; ++p) arc.push_back(p);
    } else {
        for (int p = side.v; p != side.u; p = (p + 1) % n_) arc.push_back(p);
        arc.push_back(side.u);
    }
    int h = static_cast<int>(arc.size());
    std::vector<int> local_of(static_cast<size_t>(n_), -1);
    for (int i = 0; i < h; ++i) local_of[static_cast<size_t>(arc[static_cast<size_t>(i)])] = i;
    std::vector<Edge> sub_chords;
    for (const auto& c : chords_) {
        int x = local_of[static_cast<size_t>(c.first)], y = local_of[static_cast<size_t>(c.second)];
        if (x == -1 || y == -1) continue;
        if (x > y) std::swap(x, y);
        if (y - x == 1 || (x == 0 && y == h - 1)) continue;  // boundary edge of the side
        sub_chords.emplace_back(x, y);
    }
    std::vector<int> sub_labels;
    sub_labels.reserve(static_cast<size_t>(h));
    for (int p : arc) sub_labels.push_back(labels_[static_cast<size_t>(p)]);
    return OuterplaneGraph(h, std::move(sub_chords), std::move(sub_labels));
}

WeakDual OuterplaneGraph::weak_dual() const {
    KSTAB_CHECK(n_ >= 3, "weak dual needs n >= 3");
    WeakDual d;
    // Every internal face is rooted at its widest edge, which is a chord or
    // the closing edge (0, n-1).
    auto add_face = [&](int a, int b) {
        int w = apex_inside(a, b);
        d.faces.push_back({a, w, b});
    };
    for (const auto& c : chords_) add_face(c.first, c.second);
    add_face(0, n_ - 1);
    d.adj.assign(d.faces.size(), {});
    std::map<Edge, std::vector<int>> by_edge;
    for (size_t f = 0; f < d.faces.size(); ++f) {
        const auto& fc = d.faces[f];
        by_edge[{fc.a, fc.b}].push_back(static_cast<int>(f));
        by_edge[{fc.b, fc.c}].push_back(static_cast<int>(f));
        by_edge[{fc.a, fc.c}].push_back(static_cast<int>(f));
    }
    for (const auto& [e, fs] : by_edge) {
        (void)e;
        KSTAB_CHECK(fs.size() <= 2, "edge on more than two faces");
        if (fs.size() == 2) {
            d.adj[static_cast<size_t>(fs[0])].push_back(fs[1]);
            d.adj[static_cast<size_t>(fs[1])].push_back(fs[0]);
        }
    }
    return d;
}

bool OuterplaneGraph::is_outerpath() const {
    if (n_ < 3) return true;
    return weak_dual().is_path();
}

std::vector<int> OuterplaneGraph::edge_distances(Edge from) const {
    if (from.first > from.second) std::swap(from.first, from.second);
    auto edges = skeleton_.edge_list();
    std::map<Edge, int> idx;
    for (size_t i = 0; i < edges.size(); ++i) idx[edges[i]] = static_cast<int>(i);
    KSTAB_CHECK(idx.count(from), "source edge not in graph");
    std::vector<std::vector<int>> eadj(edges.size());
    WeakDual d = weak_dual();
    for (const auto& fc : d.faces) {
        int e1 = idx[{fc.a, fc.b}], e2 = idx[{fc.b, fc.c}], e3 = idx[{fc.a, fc.c}];
        eadj[static_cast<size_t>(e1)].push_back(e2);
        eadj[static_cast<size_t>(e1)].push_back(e3);
        eadj[static_cast<size_t>(e2)].push_back(e1);
        eadj[static_cast<size_t>(e2)].push_back(e3);
        eadj[static_cast<size_t>(e3)].push_back(e1);
        eadj[static_cast<size_t>(e3)].push_back(e2);
    }
    std::vector<int> dist(edges.size(), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(idx[from])] = 0;
    q.push(idx[from]);
    while (!q.empty()) {
        int e = q.front();
        q.pop();
        for (int f : eadj[static_cast<size_t>(e)]) {
            if (dist[static_cast<size_t>(f)] == -1) {
                dist[static_cast<size_t>(f)] = dist[static_cast<size_t>(e)] + 1;
                q.push(f);
            }
        }
    }
    return dist;
}

std::optional<Edge> OuterplaneGraph::edge_parent(Edge e, Edge toward) const {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (toward.first > toward.second) std::swap(toward.first, toward.second);
    if (e == toward) return std::nullopt;
    auto dist = edge_distances(toward);
    auto edges = skeleton_.edge_list();
    std::map<Edge, int> idx;
    for (size_t i = 0; i < edges.size(); ++i) idx[edges[i]] = static_cast<int>(i);
    KSTAB_CHECK(idx.count(e), "edge not in graph");
    int de = dist[static_cast<size_t>(idx[e])];
    WeakDual d = weak_dual();
    for (const auto& fc : d.faces) {
        Edge f1{fc.a, fc.b}, f2{fc.b, fc.c}, f3{fc.a, fc.c};
        Edge fs[3] = {f1, f2, f3};
        bool has_e = (f1 == e || f2 == e || f3 == e);
        if (!has_e) continue;
        for (const auto& f : fs)
            if (f != e && dist[static_cast<size_t>(idx[f])] == de - 1) return f;
    }
    return std::nullopt;
}

OuterplaneGraph OuterplaneGraph::from_graph(const Graph& g, const std::vector<int>& outer_order) {
    int n = g.n();
    if (static_cast<int>(outer_order.size()) != n)
        throw NotMaximalOuterplanar("outer order must list every vertex once");
    std::vector<int> pos_of(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = outer_order[static_cast<size_t>(i)];
        if (v < 0 || v >= n || pos_of[static_cast<size_t>(v)] != -1)
            throw NotMaximalOuterplanar("outer order is not a permutation");
        pos_of[static_cast<size_t>(v)] = i;
    }
    if (n >= 3) {
        for (int i = 0; i < n; ++i) {
            int u = outer_order[static_cast<size_t>(i)], v = outer_order[static_cast<size_t>((i + 1) % n)];
            if (!g.has_edge(u, v)) throw NotMaximalOuterplanar("outer cycle edge missing");
        }
        if (g.m() != 2LL * n - 3) throw NotMaximalOuterplanar("edge count is not 2n-3");
    } else if (g.m() != (n == 2 ? 1 : 0)) {
        throw NotMaximalOuterplanar("degenerate graph with wrong edge count");
    }
    std::vector<Edge> chords;
    for (auto [u, v] : g.edge_list()) {
        int a = pos_of[static_cast<size_t>(u)], b = pos_of[static_cast<size_t>(v)];
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1)) continue;
        chords.emplace_back(a, b);
    }
    return OuterplaneGraph(n, std::move(chords), outer_order);
}

OuterplaneGraph complete_to_maximal(const Graph& g, const std::vector<int>& outer_order) {
    int n = g.n();
    if (static_cast<int>(outer_order.size()) != n)
        throw WitnessInvalid("outer order must list every vertex once");
    std::vector<int> pos_of(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = outer_order[static_cast<size_t>(i)];
        if (v < 0 || v >= n || pos_of[static_cast<size_t>(v)] != -1)
            throw WitnessInvalid("outer order is not a permutation");
        pos_of[static_cast<size_t>(v)] = i;
    }
    if (n < 3) return OuterplaneGraph(n, {}, outer_order);

    std::vector<Edge> chords;
    for (auto [u, v] : g.edge_list()) {
        int a = pos_of[static_cast<size_t>(u)], b = pos_of[static_cast<size_t>(v)];
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1)) continue;
        chords.emplace_back(a, b);
    }
    std::sort(chords.begin(), chords.end());
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j)
            if (chords_cross(chords[i], chords[j])) throw WitnessInvalid("edges cross under the given order");

    // Split regions at existing chords, then fan each chordless region from
    // its lowest position.
    std::vector<Edge> result = chords;
    std::vector<std::vector<int>> stack_regions;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    stack_regions.push_back(std::move(all));
    std::set<Edge> chord_set(chords.begin(), chords.end());
    while (!stack_regions.empty()) {
        std::vector<int> r = std::move(stack_regions.back());
        stack_regions.pop_back();
        int len = static_cast<int>(r.size());
        if (len < 4) continue;
        std::vector<int> ridx(static_cast<size_t>(n), -1);
        for (int i = 0; i < len; ++i) ridx[static_cast<size_t>(r[static_cast<size_t>(i)])] = i;
        bool split_found = false;
        for (const auto& c : chord_set) {
            int i = ridx[static_cast<size_t>(c.first)], j = ridx[static_cast<size_t>(c.second)];
            if (i == -1 || j == -1) continue;
            if (i > j) std::swap(i, j);
            if (j - i < 2 || (i == 0 && j == len - 1)) continue;
            std::vector<int> r1(r.begin() + i, r.begin() + j + 1);
            std::vector<int> r2(r.begin() + j, r.end());
            r2.insert(r2.end(), r.begin(), r.begin() + i + 1);
            stack_regions.push_back(std::move(r1));
            stack_regions.push_back(std::move(r2));
            split_found = true;
            break;
        }
        if (split_found) continue;
        // Fan the chordless region from its lowest position.
        int im = static_cast<int>(std::min_element(r.begin(), r.end()) - r.begin());
        std::vector<int> rot(r.begin() + im, r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + im);
        for (int j = 2; j <= len - 2; ++j)
            result.emplace_back(std::min(rot[0], rot[static_cast<size_t>(j)]),
                                std::max(rot[0], rot[static_cast<size_t>(j)]));
    }
    return OuterplaneGraph(n, std::move(result), outer_order);
}

namespace {

// Recursive core of decompose, working in position space; labels of `og` map
// local positions to the positions of the original call.
SplitSubgraph decompose_rec(const OuterplaneGraph& og, int ell, Edge xy) {
    int n = og.n();
    if (n <= 2 * ell + 1) {
        // uv = xy; the qualifying side is the whole graph.
        auto [lo, hi] = og.split(xy.first, xy.second);
        return lo.vertices.size() == n ? lo : hi;
    }
    int a = std::min(xy.first, xy.second), b = std::max(xy.first, xy.second);
    int z = og.face_apex_of_outer_edge(a, b);
    // x,z-side avoiding y, and y,z-side avoiding x.
    auto side_avoiding = [&](int p, int q, int avoid) {
        auto [lo, hi] = og.split(p, q);
        return lo.vertices.contains(avoid) ? hi : lo;
    };
    SplitSubgraph s1 = side_avoiding(a, z, b);
    SplitSubgraph s2 = side_avoiding(b, z, a);
    int n1 = s1.vertices.size(), n2 = s2.vertices.size();
    KSTAB_CHECK(n1 + n2 == n + 1, "split side sizes inconsistent");
    if (n1 < 2 * ell + 2 && n2 < 2 * ell + 2) {
        if (n1 >= ell + 2) return s1;
        KSTAB_CHECK(n2 >= ell + 2, "pigeonhole failed in decompose");
        return s2;
    }
    const SplitSubgraph& big = (n1 >= 2 * ell + 2) ? s1 : s2;
    // Recurse with this level's positions as labels so the answer maps back
    // one level at a time (og's own labels are ignored on purpose).
    OuterplaneGraph inner = OuterplaneGraph(og.n(), og.chords()).sub(big);
    SplitSubgraph rec = decompose_rec(inner, ell, {0, inner.n() - 1});
    // Map the local answer back into og positions.
    std::vector<int> verts;
    for (int p : rec.vertices) verts.push_back(inner.label(p));
    SplitSubgraph out;
    out.u = inner.label(rec.u);
    out.v = inner.label(rec.v);
    if (out.u > out.v) std::swap(out.u, out.v);
    out.vertices = VertexSet(std::move(verts));
    auto [lo, hi] = og.split(out.u, out.v);
    if (lo.vertices == out.vertices) {
        out.lower_arc = true;
    } else {
        KSTAB_CHECK(hi.vertices == out.vertices, "recursive split side not an arc of the parent");
        out.lower_arc = false;
    }
    return out;
}

}  // namespace

SplitSubgraph decompose(const OuterplaneGraph& og, int ell, Edge xy) {
    KSTAB_CHECK(ell >= 1, "ell must be >= 1");
    if (og.n() < ell + 2) throw TooSmall("graph smaller than ell+2");
    int a = std::min(xy.first, xy.second), b = std::max(xy.first, xy.second);
    KSTAB_CHECK(b - a == 1 || (a == 0 && b == og.n() - 1), "xy must lie on the outer cycle");
    // Work on a positions-as-labels copy so recursion composes cleanly.
    OuterplaneGraph pos(og.n(), og.chords());
    return decompose_rec(pos, ell, {a, b});
}

}  // namespace kstab
