#include "plabel/rotation_extender.hpp"

#include <cassert>
#include <stdexcept>

namespace plabel {

RotationExtender::RotationExtender(const RotationGraph& base) : base_(base) {
    splice_.resize(base.vertex_count());
    for (Vertex v = 0; v < base.vertex_count(); ++v)
        splice_[v].assign(base.degree(v), -1);
}

Vertex RotationExtender::add_vertex() {
    return static_cast<Vertex>(base_.vertex_count() + fresh_count_++);
}

RotationExtender::End RotationExtender::after(Dart d) {
    assert(d.tail < base_.vertex_count() && d.pos < base_.degree(d.tail));
    return End{d.tail, d.pos, false};
}

void RotationExtender::connect(End a, End b) {
    const auto edge_id = static_cast<std::int32_t>(edges_.size());
    edges_.push_back(Edge{a, b});
    for (const End& e : {a, b}) {
        if (!e.fresh) {
            if (splice_[e.v][e.pos] != -1)
                throw std::logic_error("two edges spliced after one dart");
            splice_[e.v][e.pos] = edge_id;
        }
    }
}

RotationGraph RotationExtender::build(std::vector<std::pair<Dart, Dart>>* edge_darts) const {
    const std::size_t base_n = base_.vertex_count();
    const std::size_t n = base_n + fresh_count_;

    const auto other_end = [](const Edge& e, Vertex v, std::uint32_t pos, bool fresh) {
        const bool a_side = e.a.v == v && e.a.pos == pos && e.a.fresh == fresh;
        return a_side ? e.b : e.a;
    };

    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::vector<std::uint32_t>> twin(n);

    // final position of every edge end
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_pos(edges_.size());
    const auto record = [&](const End& e, std::uint32_t at, std::int32_t edge_id) {
        if (edges_[edge_id].a.v == e.v && edges_[edge_id].a.pos == e.pos &&
            edges_[edge_id].a.fresh == e.fresh)
            edge_pos[edge_id].first = at;
        else
            edge_pos[edge_id].second = at;
    };

    // base vertices: original darts with splices interleaved
    std::vector<std::vector<std::uint32_t>> base_newpos(base_n);
    for (Vertex v = 0; v < base_n; ++v) {
        base_newpos[v].resize(base_.degree(v));
        for (std::uint32_t i = 0; i < base_.degree(v); ++i) {
            base_newpos[v][i] = static_cast<std::uint32_t>(adj[v].size());
            adj[v].push_back(base_.neighbors(v)[i]);
            if (const std::int32_t e = splice_[v][i]; e != -1) {
                const End mine{v, i, false};
                record(mine, static_cast<std::uint32_t>(adj[v].size()), e);
                adj[v].push_back(other_end(edges_[e], v, i, false).v);
            }
        }
    }
    // fresh vertices: slots named by the edge registrations
    for (const auto& [a, b] : edges_)
        for (const End& e : {a, b})
            if (e.fresh) {
                auto& list = adj[e.v];
                if (list.size() <= e.pos)
                    list.resize(e.pos + 1, std::numeric_limits<Vertex>::max());
                if (list[e.pos] != std::numeric_limits<Vertex>::max())
                    throw std::logic_error("fresh rotation slot used twice");
                list[e.pos] = other_end(Edge{a, b}, e.v, e.pos, true).v;
            }
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].a.fresh)
            edge_pos[e].first = edges_[e].a.pos;
        if (edges_[e].b.fresh)
            edge_pos[e].second = edges_[e].b.pos;
    }
    for (std::size_t v = base_n; v < n; ++v)
        for (const Vertex w : adj[v])
            if (w == std::numeric_limits<Vertex>::max())
                throw std::logic_error("fresh rotation has an unused slot");

    // twins: surviving base darts first, then the registered edges
    for (std::size_t v = 0; v < n; ++v)
        twin[v].resize(adj[v].size());
    for (Vertex v = 0; v < base_n; ++v)
        for (std::uint32_t i = 0; i < base_.degree(v); ++i) {
            const Dart t = base_.twin(Dart{v, i});
            twin[v][base_newpos[v][i]] = base_newpos[t.tail][t.pos];
        }
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        const auto [pa, pb] = edge_pos[e];
        twin[edges_[e].a.v][pa] = pb;
        twin[edges_[e].b.v][pb] = pa;
    }
    if (edge_darts) {
        edge_darts->clear();
        for (std::uint32_t e = 0; e < edges_.size(); ++e)
            edge_darts->emplace_back(Dart{edges_[e].a.v, edge_pos[e].first},
                                     Dart{edges_[e].b.v, edge_pos[e].second});
    }
    return RotationGraph::from_paired(std::move(adj), std::move(twin));
}

} // namespace plabel
