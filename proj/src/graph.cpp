#include "kstab/graph.hpp"

#include <queue>

namespace kstab {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    KSTAB_CHECK(n >= 0, "negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw OutOfRange("edge endpoint out of range");
        if (u == v) throw Error("self-loop rejected");
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    long long deg_sum = 0;
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw Error("parallel edge rejected");
        deg_sum += static_cast<long long>(a.size());
    }
    g.m_ = deg_sum / 2;
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[static_cast<size_t>(s)] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    q.push(w);
                }
            }
        }
        std::sort(out[static_cast<size_t>(id)].begin(), out[static_cast<size_t>(id)].end());
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s, std::vector<int>* remap_out) {
    std::vector<int> old_of_new(s.ids().begin(), s.ids().end());
    std::vector<int> new_of_old(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < old_of_new.size(); ++i) {
        int v = old_of_new[i];
        if (v < 0 || v >= g.n()) throw OutOfRange("vertex id out of range in set");
        new_of_old[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int v : s) {
        for (int w : g.neighbors(v)) {
            if (w > v && new_of_old[static_cast<size_t>(w)] != -1)
                edges.emplace_back(new_of_old[static_cast<size_t>(v)], new_of_old[static_cast<size_t>(w)]);
        }
    }
    if (remap_out) *remap_out = old_of_new;
    return Graph::from_edges(s.size(), edges);
}

int max_induced_degree(const Graph& g, const VertexSet& s) {
    int best = 0;
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw OutOfRange("vertex id out of range in set");
        int d = 0;
        for (int w : g.neighbors(v))
            if (s.contains(w)) ++d;
        best = std::max(best, d);
    }
    return best;
}

bool verify_kstable(const Graph& g, const VertexSet& s, int k) {
    return max_induced_degree(g, s) <= k;
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::OuterpathLB: return "outerpath-lb";
        case Algorithm::Outerplanar3LB: return "outerplanar3-lb";
        case Algorithm::OuterplanarKLB: return "outerplanark-lb";
        case Algorithm::GreedyRemoval: return "greedy-removal";
        case Algorithm::ExactOracle: return "exact-oracle";
    }
    return "unknown";
}

Algorithm algorithm_from_name(const std::string& s) {
    if (s == "outerpath-lb") return Algorithm::OuterpathLB;
    if (s == "outerplanar3-lb") return Algorithm::Outerplanar3LB;
    if (s == "outerplanark-lb") return Algorithm::OuterplanarKLB;
    if (s == "greedy-removal") return Algorithm::GreedyRemoval;
    if (s == "exact-oracle") return Algorithm::ExactOracle;
    throw Error("unknown algorithm name: " + s);
}

}  // namespace kstab
