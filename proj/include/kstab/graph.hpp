#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kstab/errors.hpp"
#include "kstab/rational.hpp"

namespace kstab {

using Edge = std::pair<int, int>;

// Set of vertex ids, kept sorted and unique.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    static VertexSet full(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        VertexSet s;
        s.ids_ = std::move(v);
        return s;
    }

    const std::vector<int>& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

    void insert(int v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }
    void erase(int v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    VertexSet unite(const VertexSet& o) const {
        std::vector<int> out;
        out.reserve(ids_.size() + o.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }
    VertexSet intersect(const VertexSet& o) const {
        std::vector<int> out;
        std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }

    bool operator==(const VertexSet& o) const { return ids_ == o.ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

private:
    std::vector<int> ids_;
};

// Simple undirected graph on dense ids 0..n-1; immutable after construction.
class Graph {
public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(static_cast<size_t>(n)) {}

    // Rejects self-loops and duplicate edges.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    long long m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const {
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }
    // Edges as sorted (min,max) pairs, lexicographic.
    std::vector<Edge> edge_list() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    std::vector<std::vector<int>> connected_components() const;

private:
    int n_;
    long long m_;
    std::vector<std::vector<int>> adj_;
};

// Induced subgraph of g on s; vertices remapped to 0..|s|-1 in id order.
// remap_out (optional) receives the new-id -> old-id table.
Graph induced_subgraph(const Graph& g, const VertexSet& s, std::vector<int>* remap_out = nullptr);

// Max over v in s of |N(v) ∩ s|; 0 for the empty set.
int max_induced_degree(const Graph& g, const VertexSet& s);

bool verify_kstable(const Graph& g, const VertexSet& s, int k);

enum class Algorithm { OuterpathLB, Outerplanar3LB, OuterplanarKLB, GreedyRemoval, ExactOracle };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& s);

// A k-stable set together with the guarantee of the method that produced it.
struct Certificate {
    int k = 0;
    VertexSet set;
    Algorithm algorithm = Algorithm::ExactOracle;
    Rational guaranteed_size;
    int achieved_size = 0;

    bool valid_for(const Graph& g) const {
        return verify_kstable(g, set, k) && achieved_size == set.size() &&
               achieved_size >= guaranteed_size.ceil();
    }
};

}  // namespace kstab
