#include "plabel/gadget.hpp"

#include <cassert>
#include <stdexcept>

#include "plabel/rotation_extender.hpp"

namespace plabel {

std::uint64_t subdivided_aux_count(std::uint64_t s) {
    std::uint64_t total = 0;
    while (s > 4) {
        s = (s + 1) / 2;
        total += s;
    }
    return total;
}

namespace {

struct AuxRecord {
    Vertex vertex;
    std::uint32_t layer;
    std::uint32_t index;
};

// Adds the auxiliary layers of a subdivided cycle on top of an s-cycle that
// already exists in the extender's base. attachments[i] is the wedge where
// cycle position i's spoke splices (for layer 1: after the dart that the
// face walk opens at position i; deeper layers attach to fresh slots).
//
// Rotation of aux vertex k in a layer of size t over a parent cycle of
// size s_parent (all cyclic):
//   [ next_aux, spoke to parent 2k+1 (when 2k+1 < s_parent),
//     spoke to parent 2k, prev_aux, down spoke (when t > 4) ]
void add_gadget_layers(RotationExtender& ext, std::vector<RotationExtender::End> attachments,
                       std::vector<AuxRecord>& aux_out) {
    std::uint32_t layer = 1;
    while (attachments.size() > 4) {
        const auto s_parent = static_cast<std::uint32_t>(attachments.size());
        const std::uint32_t t = (s_parent + 1) / 2;
        const bool deeper = t > 4;

        std::vector<Vertex> ring(t);
        for (std::uint32_t k = 0; k < t; ++k) {
            ring[k] = ext.add_vertex();
            aux_out.push_back({ring[k], layer, k});
        }

        std::vector<RotationExtender::End> next_attachments(deeper ? t : 0);
        for (std::uint32_t k = 0; k < t; ++k) {
            const bool has_hi = 2 * k + 1 < s_parent;
            const std::uint32_t lo_slot = has_hi ? 2 : 1;
            const std::uint32_t prev_slot = lo_slot + 1;
            // ring edge k -> k+1: slot 0 here, prev slot there
            const std::uint32_t succ = k + 1 == t ? 0 : k + 1;
            const bool succ_has_hi = 2 * succ + 1 < s_parent;
            ext.connect(RotationExtender::slot(ring[k], 0),
                        RotationExtender::slot(ring[succ], (succ_has_hi ? 2u : 1u) + 1));
            if (has_hi)
                ext.connect(attachments[2 * k + 1], RotationExtender::slot(ring[k], 1));
            ext.connect(attachments[2 * k], RotationExtender::slot(ring[k], lo_slot));
            if (deeper)
                next_attachments[k] = RotationExtender::slot(ring[k], prev_slot + 1);
        }
        attachments = std::move(next_attachments);
        ++layer;
    }
}

} // namespace

SubdividedCycle build_subdivided_cycle(std::uint32_t s) {
    if (s < 3)
        throw SizeError("subdivided cycle needs s >= 3, got " + std::to_string(s));

    std::vector<std::vector<Vertex>> cycle(s);
    for (Vertex i = 0; i < s; ++i)
        cycle[i] = {(i + 1) % s, (i + s - 1) % s};
    const RotationGraph base = RotationGraph::from_rotations(std::move(cycle));

    RotationExtender ext(base);
    std::vector<RotationExtender::End> attachments(s);
    for (Vertex i = 0; i < s; ++i)
        attachments[i] = ext.after(Dart{i, 1}); // after the dart to i-1: inside the cycle

    std::vector<AuxRecord> aux;
    add_gadget_layers(ext, std::move(attachments), aux);

    SubdividedCycle d;
    d.cycle_size = s;
    d.graph = ext.build();
    d.layer.assign(d.graph.vertex_count(), 0);
    for (const auto& rec : aux)
        d.layer[rec.vertex] = rec.layer;
    assert(d.aux_count() == subdivided_aux_count(s));
    return d;
}

bool gadget_distance_check(std::uint32_t s) {
    const SubdividedCycle d = build_subdivided_cycle(s);
    std::vector<Distance> dist;
    std::vector<Vertex> scratch;
    for (Vertex u = 0; u < s; ++u) {
        bfs_into(d.graph, u, dist, scratch);
        for (Vertex v = 0; v < s; ++v) {
            const std::uint32_t around = u < v ? v - u : u - v;
            const std::uint32_t cycle_dist = std::min(around, s - around);
            if (dist[v] < 0 || (std::uint64_t{1} << dist[v]) < 1 + std::uint64_t{cycle_dist})
                return false;
        }
    }
    return true;
}

AugmentedGraph augment_with_gadgets(const RotationGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3)
        throw std::invalid_argument("augment_with_gadgets needs n >= 3");

    AugmentedGraph ag;
    ag.original_count = static_cast<Vertex>(n);
    ag.faces = enumerate_faces(g).walks;

    RotationExtender ext(g);
    std::vector<AuxRecord> aux;
    std::vector<std::uint32_t> aux_face;
    for (std::uint32_t f = 0; f < ag.faces.size(); ++f) {
        const FaceWalk& walk = ag.faces[f];
        const auto s = static_cast<std::uint32_t>(walk.size());
        if (s < 3)
            throw EmbeddingError("face walk of length " + std::to_string(s) +
                                 ": input must be connected with n >= 3");
        if (s <= 4)
            continue; // D_3 and D_4 add nothing
        std::vector<RotationExtender::End> attachments(s);
        for (std::uint32_t i = 0; i < s; ++i) {
            const std::uint32_t prev = i == 0 ? s - 1 : i - 1;
            const Dart incoming{walk.vertices[prev], walk.dart_pos[prev]};
            attachments[i] = ext.after(g.twin(incoming));
        }
        add_gadget_layers(ext, std::move(attachments), aux);
        aux_face.resize(aux.size(), f);
    }

    ag.graph = ext.build();
    const std::size_t total_aux = ag.graph.vertex_count() - n;
    ag.aux_face.resize(total_aux);
    ag.aux_layer.resize(total_aux);
    ag.aux_index.resize(total_aux);
    for (std::size_t i = 0; i < aux.size(); ++i) {
        const std::size_t slot = aux[i].vertex - n;
        ag.aux_face[slot] = aux_face[i];
        ag.aux_layer[slot] = aux[i].layer;
        ag.aux_index[slot] = aux[i].index;
    }

    // structural postconditions, kept on in release builds
    if (!(ag.graph.vertex_count() < 7 * n))
        throw EmbeddingError("augmented graph breaches the 7n vertex bound");
    const FaceSet fs = validate_embedding(ag.graph);
    for (const auto& walk : fs.walks)
        if (walk.size() != 3 && walk.size() != 4)
            throw EmbeddingError("augmented face of size " + std::to_string(walk.size()));
    return ag;
}

} // namespace plabel
