#pragma once

#include <cstdint>
#include <string>

#include "kstab/graph.hpp"
#include "kstab/outerplane.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// A generated instance together with the upper bound its family certifies.
struct FamilyInstance {
    Graph graph;
    std::string family_id;
    int n = 0;
    int k = 0;
    int h = 0;
    Rational claimed_upper_bound;
    std::vector<int> outer_order;  // nonempty for outerplanar families
    std::vector<int> fillers;      // isolated padding vertices, highest ids
};

// Outerpath on which any k-stable set has at most (k-1)/k*n + 2 vertices.
// Spine of h = floor(n/k) high-degree vertices with (k-1)-vertex fans;
// n - h*k isolated fillers carry the highest ids.
FamilyInstance gen_outerpath_ub(int n, int k);

// Planar family with bound (2k-2)/(2k+1)*n + 5: the outerpath family on a
// 2h-vertex spine plus apex vertices over consecutive spine pairs.
FamilyInstance gen_planar_ub_a(int n, int k);

// Planar family with bound (k+2)/(k+4)*n + 2: a cycle plus h vertex pairs,
// each pair adjacent to the same k+2 consecutive cycle vertices.
FamilyInstance gen_planar_ub_b(int n, int k);

// 4-regular planar graph on which max-degree removal with the adversarial
// tie-break deletes n/2 - O(1) vertices before the degree drops below 4.
FamilyInstance gen_greedy_adversary(int n);

// Uniformly random triangulation of the convex n-gon (uniform over the
// Catalan-many labeled triangulations, via Remy's binary-tree sampler).
OuterplaneGraph random_maximal_outerplanar(int n, uint64_t seed);

// Random triangulation whose weak dual is a path: a left/right Bernoulli walk
// over ear additions.
OuterplaneGraph random_maximal_outerpath(int n, uint64_t seed);

// Random maximal planar graph (m = 3n-6) by Apollonian growth from K4.
Graph random_planar_triangulation(int n, uint64_t seed);

}  // namespace kstab
