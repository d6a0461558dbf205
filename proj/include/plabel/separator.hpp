#pragma once

#include <cstdint>
#include <vector>

#include "plabel/gadget.hpp"
#include "plabel/rotation_graph.hpp"

namespace plabel {

// Certified bounds, checked on every separator call and re-verified by the
// acceptance suite. Both constants are empirical for this implementation;
// violations throw SeparatorError instead of degrading silently. The worst
// log-sum factor measured across every recursion level of every generator
// family up to n = 10^5 is 4.2, so 12 carries ~3x headroom.
inline constexpr double kMaxCycleFactor = 12.0;  // walk length <= 12 * sqrt(n')
inline constexpr double kMaxLogSumFactor = 12.0; // log_sum <= 12 * sqrt(n)

// Fully triangulated version of G': one diagonal per square face, registered
// with its square so walks through a diagonal can be detoured along two real
// edges of G'.
struct Triangulation {
    struct Square {
        Vertex a, b, c, d; // corners in walk order; the diagonal joins a and c
    };

    RotationGraph graph;
    std::vector<Square> diagonals;
    std::vector<std::vector<std::int32_t>> dart_diag; // per dart: diagonal id or -1
};

Triangulation triangulate_squares(const AugmentedGraph& ag);

// Closed walk in G' whose removal (as a set) leaves every component of G'
// with at most 2/3 of the original-vertex weight.
struct CycleSeparator {
    std::vector<Vertex> walk;       // cyclic; consecutive vertices adjacent in G'
    std::vector<Vertex> vertex_set; // sorted set view of the walk
    std::uint64_t max_component_weight = 0;
};

// Fundamental-cycle separator: BFS tree of the triangulated G' from vertex 0,
// then the first non-tree edge (in deterministic dart order) whose cycle has
// interior and exterior weight both <= 2/3, with diagonals detoured through
// square corners afterwards. Interior weights for all candidate edges come
// from a subtree DP over the dual spanning tree.
CycleSeparator weighted_cycle_separator(const AugmentedGraph& ag);

// The separator projected to the original graph: ordered original vertices in
// walk order (first occurrences), with per-step distance certificates.
struct SeparatorResult {
    std::vector<Vertex> order; // u_1..u_c, distinct original vertices, cyclic
    // gaps[i] >= dist_G(order[i], order[(i+1) % c]), certified by face-cycle
    // distance; empty when c == 1
    std::vector<std::uint64_t> gaps;
    double log_sum = 0; // sum of log2(1 + gap)
    std::uint64_t max_component_size = 0; // over components of G minus the set
};

SeparatorResult project_separator(const CycleSeparator& cs, const AugmentedGraph& ag,
                                  const RotationGraph& g);

} // namespace plabel
