#pragma once

#include <cstdint>
#include <vector>

#include "plabel/rotation_graph.hpp"

namespace plabel {

// Builds a new rotation graph from a base embedding plus spliced-in edges and
// fresh vertices. Twin positions are wired explicitly from the edge
// registrations, so the result stays face-consistent even when a new edge
// parallels an existing one (name matching could pair such darts wrong).
class RotationExtender {
public:
    explicit RotationExtender(const RotationGraph& base);

    // One endpoint of a new edge.
    struct End {
        Vertex v = 0;
        std::uint32_t pos = 0; // base dart position, or slot index of a fresh vertex
        bool fresh = false;
    };

    Vertex add_vertex();

    // New dart goes immediately after base dart `d` in its tail's rotation,
    // i.e. inside the face wedge that `d` opens. At most one edge per dart.
    End after(Dart d);

    // The k-th rotation slot of a fresh vertex. Slots used for a vertex must
    // form 0..deg-1.
    static End slot(Vertex fresh_vertex, std::uint32_t k) { return End{fresh_vertex, k, true}; }

    void connect(End a, End b);

    // When `edge_darts` is given, it receives the final dart pair of every
    // registered edge, in registration order.
    RotationGraph build(std::vector<std::pair<Dart, Dart>>* edge_darts = nullptr) const;

private:
    const RotationGraph& base_;
    std::size_t fresh_count_ = 0;

    struct Edge {
        End a, b;
    };
    std::vector<Edge> edges_;
    // per base vertex: edge index spliced after each dart (-1 = none)
    std::vector<std::vector<std::int32_t>> splice_;
};

} // namespace plabel
