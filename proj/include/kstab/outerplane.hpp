#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kstab/graph.hpp"

namespace kstab {

class OuterplaneGraph;

// One side of a uv-split: the vertices of an outer-cycle arc between u and v,
// both endpoints included. Vertex ids refer to the host OuterplaneGraph.
struct SplitSubgraph {
    int u = -1;
    int v = -1;
    bool lower_arc = true;  // true: positions u..v ascending; false: the other arc
    VertexSet vertices;
};

// Weak dual of the embedding: one node per internal triangle, edges across
// shared internal edges. Always a tree of degree <= 3.
struct WeakDual {
    struct Face {
        int a, b, c;  // positions, a < b < c
    };
    std::vector<Face> faces;
    std::vector<std::vector<int>> adj;

    int degree(int f) const { return static_cast<int>(adj[static_cast<size_t>(f)].size()); }
    bool is_path() const;
};

// Maximal outerplanar graph in canonical form: the outer cycle is the identity
// order 0,1,...,n-1 and chords are stored as (min,max) position pairs.
// `labels` maps canonical positions back to the ids of whatever graph this was
// built from (identity unless constructed via from_graph/complete_to_maximal
// or a split).
class OuterplaneGraph {
public:
    OuterplaneGraph() = default;
    // chords must be pairwise non-crossing; for n >= 3 exactly n-3 of them.
    OuterplaneGraph(int n, std::vector<Edge> chords, std::vector<int> labels = {});

    int n() const { return n_; }
    const std::vector<Edge>& chords() const { return chords_; }
    const std::vector<int>& labels() const { return labels_; }
    const Graph& graph() const { return skeleton_; }

    int label(int pos) const { return labels_[static_cast<size_t>(pos)]; }
    VertexSet to_labels(const VertexSet& positions) const;

    bool has_edge(int a, int b) const { return skeleton_.has_edge(a, b); }

    // Third vertex of the internal face on edge (a,b). For a chord this is the
    // apex on the side of the shorter description given by `inner_low..high`;
    // both sides exist for chords, exactly one for outer-cycle edges.
    int apex_inside(int a, int b) const;          // apex strictly between a and b (a<b)
    int apex_outside(int a, int b) const;         // apex on the complementary arc
    int face_apex_of_outer_edge(int a, int b) const;

    std::pair<SplitSubgraph, SplitSubgraph> split(int u, int v) const;
    // Materialize a split side as its own canonical OuterplaneGraph.
    // Positions map: arc start -> 0, ..., arc end -> h-1 (so the split edge is
    // (0, h-1) locally); labels compose with this graph's labels.
    OuterplaneGraph sub(const SplitSubgraph& side) const;

    WeakDual weak_dual() const;
    bool is_outerpath() const;

    // Distance of every edge from edge `from`, in face-adjacency steps.
    // Keyed by edge index in graph().edge_list() order.
    std::vector<int> edge_distances(Edge from) const;
    // The neighbor of `e` on the face path toward `toward` (its `toward`-parent).
    std::optional<Edge> edge_parent(Edge e, Edge toward) const;

    static OuterplaneGraph from_graph(const Graph& g, const std::vector<int>& outer_order);

private:
    void build_skeleton();

    int n_ = 0;
    std::vector<Edge> chords_;
    std::vector<int> labels_;
    Graph skeleton_;
};

// Triangulates an outerplanar graph supplied with a witness cyclic order in
// which its edges are non-crossing. Missing outer-cycle edges (including ones
// chaining isolated vertices into the cycle) are added, then every internal
// face is fanned from its lowest-position vertex.
OuterplaneGraph complete_to_maximal(const Graph& g, const std::vector<int>& outer_order);

// Finds an edge uv whose split subgraph H has ell+2 <= |H| <= 2*ell+1, such
// that H avoids the edge xy unless uv == xy. xy must lie on the outer cycle.
SplitSubgraph decompose(const OuterplaneGraph& og, int ell, Edge xy);

}  // namespace kstab
