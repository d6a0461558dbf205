#include "plabel/separator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "plabel/rotation_extender.hpp"

namespace plabel {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Offline (Tarjan) lowest common ancestors on a rooted tree.
class OfflineLca {
public:
    OfflineLca(std::uint32_t n, std::uint32_t root, const std::vector<std::uint32_t>& parent)
        : root_(root), children_(n), uf_(n), ancestor_(n), queries_at_(n) {
        for (std::uint32_t v = 0; v < n; ++v) {
            uf_[v] = v;
            if (v != root && parent[v] != kNone)
                children_[parent[v]].push_back(v);
        }
    }

    void add_query(std::uint32_t a, std::uint32_t b) {
        const auto id = static_cast<std::uint32_t>(query_other_.size() / 2);
        queries_at_[a].push_back(2 * id);
        queries_at_[b].push_back(2 * id + 1);
        query_other_.push_back(b);
        query_other_.push_back(a);
    }

    // answers[i] = lca of the i-th query pair
    std::vector<std::uint32_t> solve() {
        std::vector<std::uint32_t> answer(query_other_.size() / 2, kNone);
        std::vector<char> done(children_.size(), 0);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;

        ancestor_[root_] = root_;
        stack.emplace_back(root_, 0);
        while (!stack.empty()) {
            const std::uint32_t u = stack.back().first;
            std::uint32_t& next = stack.back().second;
            if (next < children_[u].size()) {
                const std::uint32_t child = children_[u][next++];
                ancestor_[child] = child;
                stack.emplace_back(child, 0);
                continue;
            }
            done[u] = 1;
            for (const std::uint32_t q : queries_at_[u]) {
                const std::uint32_t other = query_other_[q];
                if (done[other])
                    answer[q / 2] = ancestor_[find(other)];
            }
            stack.pop_back();
            if (!stack.empty()) {
                const std::uint32_t p = stack.back().first;
                uf_[find(u)] = find(p);
                ancestor_[find(p)] = p;
            }
        }
        return answer;
    }

private:
    std::uint32_t find(std::uint32_t x) {
        while (uf_[x] != x) {
            uf_[x] = uf_[uf_[x]];
            x = uf_[x];
        }
        return x;
    }

    std::uint32_t root_;
    std::vector<std::vector<std::uint32_t>> children_;
    std::vector<std::uint32_t> uf_;
    std::vector<std::uint32_t> ancestor_;
    std::vector<std::vector<std::uint32_t>> queries_at_;
    std::vector<std::uint32_t> query_other_;
};

} // namespace

Triangulation triangulate_squares(const AugmentedGraph& ag) {
    const FaceSet fs = enumerate_faces(ag.graph);

    Triangulation tri;
    RotationExtender ext(ag.graph);
    for (const FaceWalk& walk : fs.walks) {
        if (walk.size() == 3)
            continue;
        if (walk.size() != 4)
            throw EmbeddingError("triangulation expects faces of size 3 or 4");
        // pick a non-degenerate diagonal; both pairs coinciding would need a
        // parallel edge, which G' never has
        const std::uint32_t off = walk.vertices[0] != walk.vertices[2] ? 0 : 1;
        const auto at = [&](std::uint32_t i) { return (off + i) % 4; };
        const Vertex a = walk.vertices[at(0)];
        const Vertex c = walk.vertices[at(2)];
        if (a == c)
            throw EmbeddingError("square face with both diagonals degenerate");
        // wedge at a opens after the twin of the incoming dart (d -> a);
        // same at c after the twin of (b -> c)
        const Dart into_a{walk.vertices[at(3)], walk.dart_pos[at(3)]};
        const Dart into_c{walk.vertices[at(1)], walk.dart_pos[at(1)]};
        ext.connect(ext.after(ag.graph.twin(into_a)), ext.after(ag.graph.twin(into_c)));
        tri.diagonals.push_back(
            {a, walk.vertices[at(1)], c, walk.vertices[at(3)]});
    }

    std::vector<std::pair<Dart, Dart>> edge_darts;
    tri.graph = ext.build(&edge_darts);
    tri.dart_diag.resize(tri.graph.vertex_count());
    for (Vertex v = 0; v < tri.graph.vertex_count(); ++v)
        tri.dart_diag[v].assign(tri.graph.degree(v), -1);
    for (std::uint32_t e = 0; e < edge_darts.size(); ++e) {
        tri.dart_diag[edge_darts[e].first.tail][edge_darts[e].first.pos] =
            static_cast<std::int32_t>(e);
        tri.dart_diag[edge_darts[e].second.tail][edge_darts[e].second.pos] =
            static_cast<std::int32_t>(e);
    }
    return tri;
}

CycleSeparator weighted_cycle_separator(const AugmentedGraph& ag) {
    const Triangulation tri = triangulate_squares(ag);
    const RotationGraph& G = tri.graph;
    const auto n = static_cast<std::uint32_t>(G.vertex_count());
    const std::uint64_t total_weight = ag.original_count;
    assert(n >= 3);

    // BFS tree from vertex 0 in rotation order.
    std::vector<std::uint32_t> parent(n, kNone);
    std::vector<Dart> up_dart(n); // dart child -> parent
    std::vector<std::vector<char>> is_tree(n);
    std::vector<std::uint64_t> weight_to_root(n, 0);
    std::vector<Vertex> bfs_order;
    for (Vertex v = 0; v < n; ++v)
        is_tree[v].assign(G.degree(v), 0);
    {
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        weight_to_root[0] = ag.weight(0);
        bfs_order.push_back(0);
        for (std::size_t head = 0; head < bfs_order.size(); ++head) {
            const Vertex v = bfs_order[head];
            for (std::uint32_t i = 0; i < G.degree(v); ++i) {
                const Vertex w = G.neighbors(v)[i];
                if (seen[w])
                    continue;
                seen[w] = 1;
                parent[w] = v;
                up_dart[w] = G.twin(Dart{v, i});
                is_tree[v][i] = 1;
                is_tree[w][up_dart[w].pos] = 1;
                weight_to_root[w] = weight_to_root[v] + ag.weight(w);
                bfs_order.push_back(w);
            }
        }
        if (bfs_order.size() != n)
            throw SeparatorError("augmented graph is not connected");
    }

    // Non-tree edges in deterministic dart order.
    struct NonTree {
        Dart d;      // canonical dart (smaller tail)
        Vertex u, v; // endpoints
    };
    std::vector<NonTree> nontree;
    for (Vertex v = 0; v < n; ++v)
        for (std::uint32_t i = 0; i < G.degree(v); ++i) {
            if (is_tree[v][i] || G.neighbors(v)[i] < v)
                continue;
            nontree.push_back({Dart{v, i}, v, G.neighbors(v)[i]});
        }

    // Dual spanning tree over the faces, linked by non-tree edges
    // (interdigitating trees). child_side[e] is the face subtree that hangs
    // below non-tree edge e, seen from the face of dart 0.
    const FaceSet fs = enumerate_faces(G);
    const auto face_count = static_cast<std::uint32_t>(fs.walks.size());
    std::vector<std::uint32_t> dual_parent(face_count, kNone);
    std::vector<std::uint32_t> child_side(nontree.size(), kNone);
    {
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> dual_adj(face_count);
        for (std::uint32_t e = 0; e < nontree.size(); ++e) {
            const Dart d = nontree[e].d;
            const Dart t = G.twin(d);
            const std::uint32_t f1 = fs.face_of_dart[d.tail][d.pos];
            const std::uint32_t f2 = fs.face_of_dart[t.tail][t.pos];
            if (f1 == f2)
                throw SeparatorError("non-tree edge with one incident face");
            dual_adj[f1].emplace_back(f2, e);
            dual_adj[f2].emplace_back(f1, e);
        }
        std::vector<char> seen(face_count, 0);
        std::vector<std::uint32_t> queue = {0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t f = queue[head];
            for (const auto& [g_, e] : dual_adj[f]) {
                if (seen[g_])
                    continue;
                seen[g_] = 1;
                dual_parent[g_] = f;
                child_side[e] = g_;
                queue.push_back(g_);
            }
        }
        for (std::uint32_t f = 0; f < face_count; ++f)
            if (!seen[f])
                throw SeparatorError("dual graph on non-tree edges is not spanning");
        for (std::uint32_t e = 0; e < nontree.size(); ++e)
            if (child_side[e] == kNone)
                throw SeparatorError("non-tree edge outside the dual tree");
    }

    // Preorder times of the dual tree, then each vertex's enclosing face:
    // the LCA of its incident faces (min/max preorder suffices for set LCA).
    std::vector<std::uint32_t> dual_tin(face_count, 0);
    {
        std::vector<std::vector<std::uint32_t>> children(face_count);
        for (std::uint32_t f = 0; f < face_count; ++f)
            if (dual_parent[f] != kNone)
                children[dual_parent[f]].push_back(f);
        std::uint32_t timer = 0;
        std::vector<std::uint32_t> stack = {0};
        while (!stack.empty()) {
            const std::uint32_t f = stack.back();
            stack.pop_back();
            dual_tin[f] = timer++;
            for (auto it = children[f].rbegin(); it != children[f].rend(); ++it)
                stack.push_back(*it);
        }
    }
    OfflineLca dual_lca(face_count, 0, dual_parent);
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t fmin = kNone, fmax = kNone;
        for (std::uint32_t i = 0; i < G.degree(v); ++i) {
            const std::uint32_t f = fs.face_of_dart[v][i];
            if (fmin == kNone || dual_tin[f] < dual_tin[fmin])
                fmin = f;
            if (fmax == kNone || dual_tin[f] > dual_tin[fmax])
                fmax = f;
        }
        dual_lca.add_query(fmin, fmax);
    }
    const std::vector<std::uint32_t> enclosing_face = dual_lca.solve();

    // Weight strictly inside every fundamental cycle, as a subtree sum.
    std::vector<std::uint64_t> subtree_weight(face_count, 0);
    for (Vertex v = 0; v < n; ++v)
        subtree_weight[enclosing_face[v]] += ag.weight(v);
    {
        // accumulate leaves-up: reverse BFS order of the dual tree
        std::vector<std::uint32_t> order;
        order.reserve(face_count);
        order.push_back(0);
        std::vector<std::vector<std::uint32_t>> children(face_count);
        for (std::uint32_t f = 0; f < face_count; ++f)
            if (dual_parent[f] != kNone)
                children[dual_parent[f]].push_back(f);
        for (std::size_t head = 0; head < order.size(); ++head)
            for (const std::uint32_t c : children[order[head]])
                order.push_back(c);
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (dual_parent[*it] != kNone)
                subtree_weight[dual_parent[*it]] += subtree_weight[*it];
    }

    // Primal LCAs of all non-tree edges.
    OfflineLca primal_lca(n, 0, parent);
    for (const NonTree& e : nontree)
        primal_lca.add_query(e.u, e.v);
    const std::vector<std::uint32_t> lca_of = primal_lca.solve();

    // First balanced candidate in scan order.
    std::uint32_t chosen = kNone;
    for (std::uint32_t e = 0; e < nontree.size(); ++e) {
        const std::uint64_t inside = subtree_weight[child_side[e]];
        const std::uint64_t on_cycle = weight_to_root[nontree[e].u] +
                                       weight_to_root[nontree[e].v] -
                                       2 * weight_to_root[lca_of[e]] +
                                       ag.weight(lca_of[e]);
        assert(inside + on_cycle <= total_weight);
        const std::uint64_t outside = total_weight - inside - on_cycle;
        if (3 * inside <= 2 * total_weight && 3 * outside <= 2 * total_weight) {
            chosen = e;
            break;
        }
    }
    if (chosen == kNone)
        throw SeparatorError("no balanced fundamental cycle (triangulation bug?)");

    // Cycle in walk order: u up to the lca, back down to v, closing edge v-u.
    const Vertex cu = nontree[chosen].u;
    const Vertex cv = nontree[chosen].v;
    const std::uint32_t meet = lca_of[chosen];
    std::vector<Vertex> walk;
    std::vector<std::int32_t> step_diag; // diagonal id of the step leaving walk[i]
    {
        std::vector<Vertex> down;
        for (Vertex x = cv; x != meet; x = parent[x])
            down.push_back(x);
        for (Vertex x = cu;; x = parent[x]) {
            walk.push_back(x);
            if (x == meet)
                break;
            step_diag.push_back(tri.dart_diag[up_dart[x].tail][up_dart[x].pos]);
        }
        for (auto it = down.rbegin(); it != down.rend(); ++it) {
            step_diag.push_back(tri.dart_diag[up_dart[*it].tail][up_dart[*it].pos]);
            walk.push_back(*it);
        }
        step_diag.push_back(tri.dart_diag[nontree[chosen].d.tail][nontree[chosen].d.pos]);
    }

    // Replace diagonal steps by two-edge detours through a square corner,
    // preferring a corner not already on the walk.
    CycleSeparator cs;
    std::vector<char> on_walk(n, 0);
    for (const Vertex v : walk)
        on_walk[v] = 1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        cs.walk.push_back(walk[i]);
        const std::int32_t diag = step_diag[i];
        if (diag < 0)
            continue;
        const Triangulation::Square& sq = tri.diagonals[diag];
        const Vertex corner = !on_walk[sq.b] ? sq.b : (!on_walk[sq.d] ? sq.d : sq.b);
        on_walk[corner] = 1;
        cs.walk.push_back(corner);
    }

    cs.vertex_set = cs.walk;
    std::sort(cs.vertex_set.begin(), cs.vertex_set.end());
    cs.vertex_set.erase(std::unique(cs.vertex_set.begin(), cs.vertex_set.end()),
                        cs.vertex_set.end());

    if (static_cast<double>(cs.walk.size()) >
        kMaxCycleFactor * std::sqrt(static_cast<double>(n)))
        throw SeparatorError("separator walk exceeds the certified length bound");

    // Direct component sweep of G' minus the set: the certificate the rest of
    // the pipeline relies on.
    {
        const RotationGraph& Gp = ag.graph;
        std::vector<char> removed(Gp.vertex_count(), 0);
        for (const Vertex v : cs.vertex_set)
            removed[v] = 1;
        std::vector<char> seen(Gp.vertex_count(), 0);
        std::vector<Vertex> queue;
        for (Vertex v = 0; v < Gp.vertex_count(); ++v) {
            if (removed[v] || seen[v])
                continue;
            std::uint64_t w = 0;
            queue.assign(1, v);
            seen[v] = 1;
            while (!queue.empty()) {
                const Vertex x = queue.back();
                queue.pop_back();
                w += ag.weight(x);
                for (const Vertex y : Gp.neighbors(x))
                    if (!removed[y] && !seen[y]) {
                        seen[y] = 1;
                        queue.push_back(y);
                    }
            }
            cs.max_component_weight = std::max(cs.max_component_weight, w);
        }
        if (3 * cs.max_component_weight > 2 * total_weight)
            throw SeparatorError("separator balance certificate failed on G'");
    }
    return cs;
}

SeparatorResult project_separator(const CycleSeparator& cs, const AugmentedGraph& ag,
                                  const RotationGraph& g) {
    const Vertex n = ag.original_count;
    const std::size_t len = cs.walk.size();

    // Positions of original vertices along the walk.
    std::vector<std::size_t> orig_pos;
    for (std::size_t i = 0; i < len; ++i)
        if (ag.is_original(cs.walk[i]))
            orig_pos.push_back(i);
    if (orig_pos.empty())
        throw SeparatorError("separator walk contains no original vertex");

    // Distance certificate for one step between consecutive original
    // occurrences. Direct edges are original graph edges (gap 1); an aux run
    // stays inside one face's gadget, entered and left through layer-1
    // spokes whose walk positions bound the face-cycle distance.
    const auto spoke_position = [&](Vertex aux, Vertex original) -> std::uint64_t {
        const std::size_t slot = aux - n;
        if (ag.aux_layer[slot] != 1)
            throw SeparatorError("walk enters a gadget above layer 1");
        const FaceWalk& face = ag.faces[ag.aux_face[slot]];
        const std::uint64_t lo = 2ull * ag.aux_index[slot];
        if (face.vertices[lo] == original)
            return lo;
        if (lo + 1 < face.size() && face.vertices[lo + 1] == original)
            return lo + 1;
        throw SeparatorError("spoke does not match its face position");
    };
    const auto step_gap = [&](std::size_t from, std::size_t to) -> std::uint64_t {
        const std::size_t next = (from + 1) % len;
        if (next == to)
            return 1; // direct original-original edge of G
        const Vertex enter = cs.walk[next];
        const Vertex leave = cs.walk[(to + len - 1) % len];
        const std::uint32_t face_id = ag.aux_face[enter - n];
        for (std::size_t i = next; i != to; i = (i + 1) % len)
            if (ag.is_original(cs.walk[i]) || ag.aux_face[cs.walk[i] - n] != face_id)
                throw SeparatorError("aux run leaves its face gadget");
        const std::uint64_t p_in = spoke_position(enter, cs.walk[from]);
        const std::uint64_t p_out = spoke_position(leave, cs.walk[to]);
        const std::uint64_t s = ag.faces[face_id].size();
        const std::uint64_t d = p_in < p_out ? p_out - p_in : p_in - p_out;
        return std::min(d, s - d);
    };

    // Step gaps between consecutive original occurrences, then first
    // occurrences only with the skipped steps' gaps accumulated (triangle
    // inequality keeps them valid upper bounds).
    const std::size_t c_occ = orig_pos.size();
    SeparatorResult res;
    std::vector<char> seen_vertex(n, 0);
    std::vector<std::uint64_t> merged;
    for (std::size_t i = 0; i < c_occ; ++i) {
        const Vertex v = cs.walk[orig_pos[i]];
        const std::uint64_t gap =
            c_occ == 1 ? 0 : step_gap(orig_pos[i], orig_pos[(i + 1) % c_occ]);
        if (!seen_vertex[v]) {
            seen_vertex[v] = 1;
            res.order.push_back(v);
            merged.push_back(gap);
        } else {
            merged.back() += gap;
        }
    }
    if (res.order.size() >= 2) {
        res.gaps = std::move(merged);
        for (const std::uint64_t gap : res.gaps)
            res.log_sum += std::log2(1.0 + static_cast<double>(gap));
    }

    // Balance re-verified directly on G minus S.
    {
        std::vector<char> removed(n, 0);
        for (const Vertex v : res.order)
            removed[v] = 1;
        std::vector<char> seen(n, 0);
        std::vector<Vertex> queue;
        for (Vertex v = 0; v < n; ++v) {
            if (removed[v] || seen[v])
                continue;
            std::uint64_t size = 0;
            queue.assign(1, v);
            seen[v] = 1;
            while (!queue.empty()) {
                const Vertex x = queue.back();
                queue.pop_back();
                ++size;
                for (const Vertex y : g.neighbors(x))
                    if (!removed[y] && !seen[y]) {
                        seen[y] = 1;
                        queue.push_back(y);
                    }
            }
            res.max_component_size = std::max(res.max_component_size, size);
        }
        if (3 * res.max_component_size > 2 * std::uint64_t{n})
            throw SeparatorError("projected separator is not balanced on G");
    }
    if (res.log_sum > kMaxLogSumFactor * std::sqrt(static_cast<double>(n)))
        throw SeparatorError("log-sum certificate exceeds the configured bound");
    return res;
}

} // namespace plabel
