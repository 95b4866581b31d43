#pragma once

#include <optional>
#include <string>

#include "kstab/graph.hpp"
#include "kstab/outerplane.hpp"

namespace kstab {

// Which endpoint-constrained set family to build on a host split subgraph.
// Hosts are canonical OuterplaneGraphs whose split endpoints are the
// positions 0 and h-1. `include` says which endpoints must be in the set;
// every endpoint not included is excluded. `cap` bounds the in-set degree of
// each included endpoint. Instances: 5-over-7 (a=5,h=7,one endpoint,cap 1),
// 6-over-7 (a=6,h=7,both,cap 2), 6-over-8 (a=6,h=8,one,cap 2; deg-1 variant
// cap 1), 8-over-11 (a=8,h=11,one,cap 1), and for k>=4 the (h-2)-over-h
// (one endpoint, cap h-k-3) and (h-1)-over-h (both, cap h-k-2) families.
struct QualifiedSetSpec {
    int h = 0;
    int a = 0;
    bool include_u = false;  // endpoint at position 0
    bool include_v = false;  // endpoint at position h-1
    int cap = 0;
};

// A split-side set avoiding both endpoints whose size meets the h-range
// bracket used by the k >= 4 machine: h-2 up to l3+3 vertices, h-3 up to
// 2k+4, h-4 up to 2*l3+5, where l3 = 3k/2 rounded down to the parity rule.
struct GoodSet {
    VertexSet set;
    int h = 0;
};

// Required good-set size for a host of h vertices at this k.
int good_set_bracket(int h, int k);

// Validates exclusion of both endpoints, the size bracket, and k-stability.
GoodSet make_good_set(const OuterplaneGraph& host, VertexSet set, int k);

// One peel step of the recursion, for debugging and acceptance assertions.
struct CaseTrace {
    int h = 0;
    int h1 = 0;
    int h2 = 0;
    std::string spec;  // construction used
    int u = -1;        // split endpoints, original ids
    int v = -1;
    bool merge_ok = false;
    int remainder = 0;
};

struct OuterplanarRun {
    Certificate certificate;
    std::vector<CaseTrace> trace;
};

// Union of a split-side set with a remainder set. I_H must avoid both split
// endpoints (the only vertices with neighbors across the cut), otherwise
// PreconditionViolated.
VertexSet merge_split_sets(const VertexSet& i_h, const VertexSet& i_hbar, int u, int v);

// Builds the requested set on the host via the explicit constructions;
// NotFound signals a violated case assumption (an internal bug, not bad
// input). The result is validated against the spec before returning.
VertexSet build_qualified_set(const OuterplaneGraph& host, const QualifiedSetSpec& spec, int k);

// Exact maximum k-stable set on a small host (the recursion base).
VertexSet base_case_set(const OuterplaneGraph& og, int k);

Certificate solve_outerplanar(const OuterplaneGraph& og, int k);
OuterplanarRun solve_outerplanar_traced(const OuterplaneGraph& og, int k);

std::string trace_to_jsonl(const std::vector<CaseTrace>& trace);

}  // namespace kstab
