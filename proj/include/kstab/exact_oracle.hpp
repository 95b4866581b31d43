#pragma once

#include <functional>

#include "kstab/graph.hpp"
#include "kstab/outerplane.hpp"

namespace kstab {

struct SearchBudget {
    long long node_limit = 10'000'000;
    long long time_limit_ms = 60'000;
};

struct SearchStats {
    long long nodes_expanded = 0;
    int best_size = 0;
    bool proven_optimal = false;
    long long time_ms = 0;
};

// Maximum-cardinality k-stable set by branch and bound. Branching picks a
// kept vertex of maximal induced degree > k and removes either it or one of
// its kept neighbors; pruning uses a packing of disjoint violation stars.
// On budget exhaustion the incumbent is returned with proven_optimal=false.
std::pair<VertexSet, SearchStats> exact_max_kstable(const Graph& g, int k, SearchBudget budget = {});

// Minimum dominating set by set-cover branch and bound with
// undominated-vertex branching.
std::pair<VertexSet, SearchStats> exact_min_dominating(const Graph& g, SearchBudget budget = {});

// Every triangulation of the labeled convex n-gon, exactly once
// (Catalan(n-2) of them). 3 <= n <= 14.
void enumerate_polygon_triangulations(int n, const std::function<void(const OuterplaneGraph&)>& fn);

long long catalan(int n);

}  // namespace kstab
