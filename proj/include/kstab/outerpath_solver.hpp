#pragma once

#include <variant>

#include "kstab/graph.hpp"
#include "kstab/outerplane.hpp"

namespace kstab {

// State of the G_L growth on one maximal outerpath: gl is the set of
// positions currently in G_L; the active vertex is the endpoint of the active
// edge that still has at least two neighbors outside gl; the special edge is
// the outer edge at an extreme face this pass started from.
struct ActiveFront {
    VertexSet gl;
    int active_vertex = -1;
    Edge active_edge{-1, -1};
    Edge special_edge{-1, -1};
    int special_vertex = -1;
};

struct GrowContinue {
    ActiveFront front;
};
struct GrowCut {
    int h;          // vertex excluded from the pass's set
    Edge wz;        // split edge; the recursion continues on its far side
    VertexSet gl;   // G_L after moving w,z back
};
using GrowResult = std::variant<GrowContinue, GrowCut>;

ActiveFront init_front(const OuterplaneGraph& og);

// One absorption step: move the active vertex's outside neighbors into gl,
// pick the farthest adjacent pair (s',t') among its neighbors, then either
// continue (|gl| still <= k+1) or cut.
GrowResult grow_front(const ActiveFront& front, const OuterplaneGraph& og, int k);

// Guarantees a set of size (k-1)/k * n on any maximal outerpath, k >= 3.
Certificate solve_outerpath(const OuterplaneGraph& og, int k);

}  // namespace kstab
