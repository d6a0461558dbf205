#pragma once

#include <cstdint>
#include <vector>

#include "plabel/rotation_graph.hpp"

namespace plabel {

// Subdivided cycle D_s: the cycle C_s (vertices 0..s-1) plus recursive
// auxiliary layers. Layer 1 holds ceil(s/2) vertices, cycle vertex i hangs
// off aux floor(i/2), and the construction recurses on the aux cycle until
// it reaches C_3/C_4. Distances between cycle vertices inside D_s grow at
// least logarithmically in their cycle distance, which is what makes the
// separator's difference stream cheap to encode.
struct SubdividedCycle {
    std::uint32_t cycle_size = 0;
    RotationGraph graph; // cycle vertices first, aux vertices after
    std::vector<std::uint32_t> layer; // 0 for cycle vertices, 1.. for aux

    std::size_t aux_count() const { return graph.vertex_count() - cycle_size; }
};

// aux(s) = 0 for s <= 4, ceil(s/2) + aux(ceil(s/2)) otherwise. Never exceeds s.
std::uint64_t subdivided_aux_count(std::uint64_t s);

// Throws SizeError for s < 3.
SubdividedCycle build_subdivided_cycle(std::uint32_t s);

// True iff every cycle pair (u,v) of D_s satisfies
// 2^dist_D(u,v) >= 1 + dist_C(u,v), checked exactly by BFS.
bool gadget_distance_check(std::uint32_t s);

// G' = G with every face walk (outer face included) overlaid by a subdivided
// cycle of the walk's length. Cycle edges are identified with the existing
// face edges; spokes and inner layers are new vertices embedded inside the
// face. Original vertices keep their ids and carry weight 1, aux vertices
// weight 0.
struct AugmentedGraph {
    RotationGraph graph;
    Vertex original_count = 0;
    std::vector<FaceWalk> faces; // walks of the input graph; position i of
                                 // face f is identified with gadget cycle
                                 // vertex i of f's gadget
    std::vector<std::uint32_t> aux_face;  // per aux vertex (id - n)
    std::vector<std::uint32_t> aux_layer; // 1 = attached to the face walk
    std::vector<std::uint32_t> aux_index; // position within its layer

    bool is_original(Vertex v) const { return v < original_count; }
    std::uint64_t weight(Vertex v) const { return v < original_count ? 1 : 0; }
    std::size_t aux_count() const { return graph.vertex_count() - original_count; }
};

// Requires g connected with n >= 3 (smaller inputs never reach the
// separator; the labeler base case absorbs them). Postconditions checked on
// every call: n' < 7n, every face of G' is a triangle or square, Euler holds.
AugmentedGraph augment_with_gadgets(const RotationGraph& g);

} // namespace plabel
