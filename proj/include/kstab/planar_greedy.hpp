#pragma once

#include <map>
#include <optional>
#include <string>

#include "kstab/graph.hpp"
#include "kstab/rational.hpp"

namespace kstab {

enum class Strategy { Plain, DominatingSet, Best };
enum class Tiebreak { LowestId, Adversarial };
enum class DomMode { Exact, Heuristic };

// Per-run accounting of GreedyRemoval: r_i counters, snapshot sizes of the
// first graph of each degree, and the dominating-set phase when it ran.
struct RemovalTrace {
    std::map<int, long long> removed_by_degree;          // r_i
    std::map<int, long long> snapshot_sizes;             // |V(G_i)|
    std::vector<std::pair<int, int>> removal_log;        // (vertex, degree at removal)
    struct ComponentDom {
        int original_size = 0;
        int augmented_size = 0;
        int added_vertices = 0;
        int domset_size = 0;
        bool exact = false;
        bool cited_bound_met = false;  // |D| <= floor(4h/11) resp. floor(5h/14)
    };
    std::vector<ComponentDom> domset_components;
    bool used_domset = false;
    std::string strategy_used;

    long long r6plus() const {
        long long s = 0;
        for (const auto& [deg, cnt] : removed_by_degree)
            if (deg >= 6) s += cnt;
        return s;
    }
    long long removed_total() const {
        long long s = 0;
        for (const auto& [deg, cnt] : removed_by_degree) s += cnt;
        return s;
    }
};

struct AugmentationReport {
    std::vector<Edge> added_edges;  // saturation and gadget edges
    std::vector<int> added_vertices_per_component;
    std::string gadget_case;  // residual degree multisets, per component
};

struct BoundReport {
    long long n = 0;
    long long m = 0;
    int d = 0;
    int k = 0;
    std::optional<int> girth;
    Rational value;
    std::string case_id;
};

// Max-degree removal until degree <= k; for k in {3,4} the DominatingSet
// strategy instead stops at degree k+1, augments each component to
// (k+1)-regular and deletes a dominating set of the augmentation.
std::pair<Certificate, RemovalTrace> greedy_removal(const Graph& g, int k, Strategy strategy,
                                                    Tiebreak tiebreak = Tiebreak::LowestId,
                                                    int exact_cap = 60);

// Adds edges between non-adjacent vertices of degree < r until the deficient
// vertices induce a clique (of at most r vertices).
Graph edge_saturate(const Graph& g, int r);

// Saturates and gadget-extends every component to an r-regular graph,
// r in {4,5}; at most 6 (r=4) or 7 (r=5) vertices are added per component.
std::pair<Graph, AugmentationReport> augment_to_regular(const Graph& g, int r);

VertexSet dominating_set(const Graph& g, DomMode mode, int exact_cap = 60);

// Closed-form guaranteed sizes: the (d,k) case table, or with `girth` the
// sparse-planar variants (m bounded by g(n-2)/(g-2)).
BoundReport bound_calculator(long long n, long long m, int d, int k,
                             std::optional<int> girth = std::nullopt);

// Gadget search: a simple graph on t <= max_new new vertices, all of degree r
// counting attachment edges, supplying exactly deficiencies[j] edges to
// residual vertex j. attach pairs are (residual index, new index).
struct Gadget {
    int t = 0;
    std::vector<Edge> internal_edges;             // between new vertices
    std::vector<std::pair<int, int>> attachments;  // (residual idx, new idx)
};
std::optional<Gadget> find_gadget(const std::vector<int>& deficiencies, int r, int max_new);

std::string removal_trace_to_jsonl(const RemovalTrace& trace);

}  // namespace kstab
