#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plabel/errors.hpp"

namespace plabel {

using Vertex = std::uint32_t;
using Distance = std::int64_t;

// Sentinel for vertex pairs in different connected components. Distinct from
// every hop count; queries return it instead of failing.
inline constexpr Distance kUnreachable = -1;

// A dart is one directed occurrence of an undirected edge, addressed by its
// tail vertex and its position in the tail's rotation list.
struct Dart {
    Vertex tail;
    std::uint32_t pos;

    bool operator==(const Dart&) const = default;
};

// Undirected graph given as a rotation system: per vertex, the cyclic
// clockwise order of its neighbors. Each undirected edge contributes one
// entry to each endpoint's list. Parallel edges are representable (the twin
// table pairs dart occurrences, not vertex names) but only arise from
// internal constructions; input graphs must be simple.
class RotationGraph {
public:
    RotationGraph() = default;

    // Validates symmetry/simplicity, builds the twin table. Throws
    // EmbeddingError on self-loops, parallel edges or asymmetric lists.
    static RotationGraph from_rotations(std::vector<std::vector<Vertex>> adjacency);

    // Trusted constructor for internal builders that supply an exact dart
    // pairing (required when parallel edges exist).
    static RotationGraph from_paired(std::vector<std::vector<Vertex>> adjacency,
                                     std::vector<std::vector<std::uint32_t>> twin);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adj_[v].size()); }
    Vertex head(Dart d) const { return adj_[d.tail][d.pos]; }
    Dart twin(Dart d) const { return Dart{adj_[d.tail][d.pos], twin_[d.tail][d.pos]}; }

    // Dart that follows `d` when tracing a face: the twin's successor in the
    // head's rotation. Every dart lies on exactly one face walk.
    Dart face_next(Dart d) const {
        const Vertex h = adj_[d.tail][d.pos];
        const std::uint32_t t = twin_[d.tail][d.pos];
        return Dart{h, t + 1 == adj_[h].size() ? 0 : t + 1};
    }

    const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }
    const std::vector<std::vector<std::uint32_t>>& twins() const { return twin_; }

    // FNV-1a over the canonical text form; embedded in label files so labels
    // from different builds cannot be mixed.
    std::uint64_t fingerprint() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<std::uint32_t>> twin_;
    std::size_t edge_count_ = 0;
};

// One face of the embedding: the cyclic walk of darts tracing it. Vertices
// may repeat when the graph is not 2-connected.
struct FaceWalk {
    std::vector<Vertex> vertices; // vertices[i] = tail of the i-th dart
    std::vector<std::uint32_t> dart_pos; // position of that dart in its tail's rotation

    std::size_t size() const { return vertices.size(); }
};

struct FaceSet {
    std::vector<FaceWalk> walks;
    // face id per dart, parallel to the adjacency lists
    std::vector<std::vector<std::uint32_t>> face_of_dart;
};

struct DistanceRow {
    Vertex source = 0;
    std::vector<Distance> dist; // hop count or kUnreachable
};

struct ComponentMap {
    std::vector<std::uint32_t> component; // dense ids, 0..count-1, by smallest vertex
    std::uint32_t count = 0;
};

struct SubEmbedding {
    RotationGraph graph;
    std::vector<Vertex> to_old; // new id -> old id
    std::vector<Vertex> to_new; // old id -> new id (undefined for dropped vertices)
};

// Parses the line-oriented graph file format: header "n m", then n rotation
// lines. Lines whose first non-blank character is '#' are skipped; a '#'
// inside a data line starts a trailing comment. A blank data line is a
// degree-0 vertex. Enforces all RotationGraph invariants including the
// planarity edge bound and the Euler check.
RotationGraph load_graph(std::string_view text);

// Canonical text form of a graph, parseable by load_graph.
std::string write_graph(const RotationGraph& g);

// Traces every face of the embedding. Each dart is covered exactly once and
// walk lengths sum to 2m.
FaceSet enumerate_faces(const RotationGraph& g);

// Face enumeration plus the per-component Euler check V - E + F = 2.
// Throws EmbeddingError when the rotation system is not planar.
FaceSet validate_embedding(const RotationGraph& g);

DistanceRow bfs_distances(const RotationGraph& g, Vertex source);

// Allocation-free core for callers that run many searches.
void bfs_into(const RotationGraph& g, Vertex source, std::vector<Distance>& dist,
              std::vector<Vertex>& queue_scratch);

ComponentMap connected_components(const RotationGraph& g);

// Restriction of the embedding to `keep` (sorted, nonempty): rotation lists
// filtered to kept neighbors, cyclic order preserved.
SubEmbedding induced_subembedding(const RotationGraph& g, std::span<const Vertex> keep);

// True when the graph has no articulation vertex (and n >= 2).
bool is_biconnected(const RotationGraph& g);

} // namespace plabel
