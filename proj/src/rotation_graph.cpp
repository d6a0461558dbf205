#include "plabel/rotation_graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>

namespace plabel {

namespace {

constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

std::uint64_t fnv1a(std::uint64_t hash, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        hash ^= (value >> (8 * i)) & 0xffu;
        hash *= 1099511628211ull;
    }
    return hash;
}

} // namespace

RotationGraph RotationGraph::from_rotations(std::vector<std::vector<Vertex>> adjacency) {
    const std::size_t n = adjacency.size();
    std::size_t dart_count = 0;

    // (neighbor, position) pairs per vertex, sorted for twin lookup
    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> index(n);
    for (Vertex v = 0; v < n; ++v) {
        auto& list = adjacency[v];
        dart_count += list.size();
        index[v].reserve(list.size());
        for (std::uint32_t i = 0; i < list.size(); ++i) {
            const Vertex w = list[i];
            if (w >= n)
                throw EmbeddingError("neighbor id out of range");
            if (w == v)
                throw EmbeddingError("self-loop at vertex " + std::to_string(v));
            index[v].emplace_back(w, i);
        }
        std::sort(index[v].begin(), index[v].end());
        for (std::size_t i = 1; i < index[v].size(); ++i)
            if (index[v][i].first == index[v][i - 1].first)
                throw EmbeddingError("parallel edge at vertex " + std::to_string(v));
    }
    if (dart_count % 2 != 0)
        throw EmbeddingError("odd dart count: rotation lists are asymmetric");

    std::vector<std::vector<std::uint32_t>> twin(n);
    for (Vertex v = 0; v < n; ++v) {
        twin[v].resize(adjacency[v].size());
        for (std::uint32_t i = 0; i < adjacency[v].size(); ++i) {
            const Vertex w = adjacency[v][i];
            const auto it = std::lower_bound(index[w].begin(), index[w].end(),
                                             std::make_pair(v, std::uint32_t{0}));
            if (it == index[w].end() || it->first != v)
                throw EmbeddingError("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                     " missing from the reverse rotation");
            twin[v][i] = it->second;
        }
    }

    RotationGraph g;
    g.adj_ = std::move(adjacency);
    g.twin_ = std::move(twin);
    g.edge_count_ = dart_count / 2;
    return g;
}

RotationGraph RotationGraph::from_paired(std::vector<std::vector<Vertex>> adjacency,
                                         std::vector<std::vector<std::uint32_t>> twin) {
    RotationGraph g;
    g.edge_count_ = 0;
    for (const auto& list : adjacency)
        g.edge_count_ += list.size();
    g.edge_count_ /= 2;
    g.adj_ = std::move(adjacency);
    g.twin_ = std::move(twin);
#ifndef NDEBUG
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (std::uint32_t i = 0; i < g.degree(v); ++i) {
            const Dart back = g.twin(g.twin(Dart{v, i}));
            assert(back.tail == v && back.pos == i);
        }
#endif
    return g;
}

std::uint64_t RotationGraph::fingerprint() const {
    std::uint64_t hash = 1469598103934665603ull;
    hash = fnv1a(hash, vertex_count());
    hash = fnv1a(hash, edge_count());
    for (const auto& list : adj_) {
        hash = fnv1a(hash, list.size());
        for (const Vertex w : list)
            hash = fnv1a(hash, w);
    }
    return hash;
}

namespace {

std::uint64_t parse_u64(std::string_view token, std::string_view what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("bad " + std::string(what) + ": '" + std::string(token) + "'");
    return value;
}

// Splits into whitespace-separated tokens.
std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

RotationGraph load_graph(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] != '#') {
            if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            lines.push_back(line);
        }
        if (end == text.size())
            break;
        start = end + 1;
    }

    std::size_t row = 0;
    while (row < lines.size() && tokens_of(lines[row]).empty())
        ++row;
    if (row == lines.size())
        throw ParseError("missing header line");
    const auto header = tokens_of(lines[row]);
    if (header.size() != 2)
        throw ParseError("header must be 'n m'");
    const std::uint64_t n = parse_u64(header[0], "vertex count");
    const std::uint64_t m = parse_u64(header[1], "edge count");
    ++row;

    std::vector<std::vector<Vertex>> adjacency(n);
    std::size_t dart_count = 0;
    for (std::uint64_t v = 0; v < n; ++v, ++row) {
        if (row >= lines.size())
            throw ParseError("expected " + std::to_string(n) + " rotation lines, got " +
                             std::to_string(v));
        for (const auto token : tokens_of(lines[row])) {
            const std::uint64_t w = parse_u64(token, "neighbor id");
            if (w >= n)
                throw ParseError("neighbor id " + std::to_string(w) + " out of range");
            adjacency[v].push_back(static_cast<Vertex>(w));
            ++dart_count;
        }
    }
    for (; row < lines.size(); ++row)
        if (!tokens_of(lines[row]).empty())
            throw ParseError("trailing content after the last rotation line");

    if (dart_count != 2 * m)
        throw ParseError("header claims m=" + std::to_string(m) + " but rotation lists hold " +
                         std::to_string(dart_count) + " darts");
    // Planarity necessary condition for simple graphs.
    const std::uint64_t bound = n >= 3 ? 3 * n - 6 : (n == 2 ? 1 : 0);
    if (m > bound)
        throw EmbeddingError("m=" + std::to_string(m) + " exceeds the planar bound " +
                             std::to_string(bound));

    RotationGraph g = RotationGraph::from_rotations(std::move(adjacency));
    validate_embedding(g);
    return g;
}

std::string write_graph(const RotationGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        bool first = true;
        for (const Vertex w : g.neighbors(v)) {
            if (!first)
                out << ' ';
            out << w;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

FaceSet enumerate_faces(const RotationGraph& g) {
    FaceSet fs;
    fs.face_of_dart.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        fs.face_of_dart[v].assign(g.degree(v), std::numeric_limits<std::uint32_t>::max());

    std::size_t traced = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::uint32_t i = 0; i < g.degree(v); ++i) {
            if (fs.face_of_dart[v][i] != std::numeric_limits<std::uint32_t>::max())
                continue;
            const auto face_id = static_cast<std::uint32_t>(fs.walks.size());
            FaceWalk walk;
            Dart d{v, i};
            do {
                fs.face_of_dart[d.tail][d.pos] = face_id;
                walk.vertices.push_back(d.tail);
                walk.dart_pos.push_back(d.pos);
                ++traced;
                d = g.face_next(d);
            } while (!(d.tail == v && d.pos == i));
            fs.walks.push_back(std::move(walk));
        }
    }
    assert(traced == 2 * g.edge_count());
    (void)traced;
    return fs;
}

FaceSet validate_embedding(const RotationGraph& g) {
    FaceSet fs = enumerate_faces(g);
    const ComponentMap cm = connected_components(g);

    std::vector<std::uint64_t> vertices(cm.count, 0), darts(cm.count, 0), faces(cm.count, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ++vertices[cm.component[v]];
        darts[cm.component[v]] += g.degree(v);
    }
    for (const auto& walk : fs.walks)
        ++faces[cm.component[walk.vertices.front()]];

    for (std::uint32_t c = 0; c < cm.count; ++c) {
        if (darts[c] == 0)
            continue; // isolated vertex: one implicit face, Euler holds by convention
        const std::int64_t euler = static_cast<std::int64_t>(vertices[c]) -
                                   static_cast<std::int64_t>(darts[c] / 2) +
                                   static_cast<std::int64_t>(faces[c]);
        if (euler != 2)
            throw EmbeddingError("component " + std::to_string(c) +
                                 " fails the Euler check (V-E+F=" + std::to_string(euler) +
                                 "): rotation system is not planar");
    }
    return fs;
}

void bfs_into(const RotationGraph& g, Vertex source, std::vector<Distance>& dist,
              std::vector<Vertex>& queue_scratch) {
    dist.assign(g.vertex_count(), kUnreachable);
    queue_scratch.clear();
    dist[source] = 0;
    queue_scratch.push_back(source);
    for (std::size_t head = 0; head < queue_scratch.size(); ++head) {
        const Vertex v = queue_scratch[head];
        const Distance next = dist[v] + 1;
        for (const Vertex w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = next;
                queue_scratch.push_back(w);
            }
        }
    }
}

DistanceRow bfs_distances(const RotationGraph& g, Vertex source) {
    DistanceRow row;
    row.source = source;
    std::vector<Vertex> scratch;
    bfs_into(g, source, row.dist, scratch);
    return row;
}

ComponentMap connected_components(const RotationGraph& g) {
    ComponentMap cm;
    cm.component.assign(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (cm.component[v] != std::numeric_limits<std::uint32_t>::max())
            continue;
        const std::uint32_t id = cm.count++;
        cm.component[v] = id;
        queue.assign(1, v);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (const Vertex w : g.neighbors(queue[head]))
                if (cm.component[w] == std::numeric_limits<std::uint32_t>::max()) {
                    cm.component[w] = id;
                    queue.push_back(w);
                }
    }
    return cm;
}

SubEmbedding induced_subembedding(const RotationGraph& g, std::span<const Vertex> keep) {
    assert(!keep.empty());
    SubEmbedding sub;
    sub.to_old.assign(keep.begin(), keep.end());
    sub.to_new.assign(g.vertex_count(), kNoVertex);
    for (std::uint32_t i = 0; i < sub.to_old.size(); ++i)
        sub.to_new[sub.to_old[i]] = i;

    std::vector<std::vector<Vertex>> adjacency(keep.size());
    for (std::uint32_t i = 0; i < sub.to_old.size(); ++i)
        for (const Vertex w : g.neighbors(sub.to_old[i]))
            if (sub.to_new[w] != kNoVertex)
                adjacency[i].push_back(sub.to_new[w]);
    sub.graph = RotationGraph::from_rotations(std::move(adjacency));
    return sub;
}

bool is_biconnected(const RotationGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2)
        return false;

    std::vector<std::uint32_t> disc(n, 0), low(n, 0);
    std::vector<Vertex> parent(n, kNoVertex);
    std::uint32_t timer = 1;
    std::uint32_t root_children = 0;

    // Iterative articulation-point search starting from vertex 0.
    struct Frame {
        Vertex v;
        std::uint32_t next_edge;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        auto& [v, next_edge] = stack.back();
        if (next_edge < g.degree(v)) {
            const Vertex w = g.neighbors(v)[next_edge++];
            if (disc[w] == 0) {
                parent[w] = v;
                if (v == 0)
                    ++root_children;
                disc[w] = low[w] = timer++;
                stack.push_back({w, 0});
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                const Vertex p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p])
                    return false; // articulation vertex p
            }
        }
    }
    if (root_children > 1)
        return false;
    for (Vertex v = 0; v < n; ++v)
        if (disc[v] == 0)
            return false; // disconnected
    return true;
}

} // namespace plabel
