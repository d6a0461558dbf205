#include "plabel/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plabel {

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("SeededRng::below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

RotationGraph gen_grid(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("grid needs rows, cols >= 1");
    const auto id = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(rows) * cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) {
            auto& list = adj[id(r, c)];
            if (r > 0) list.push_back(id(r - 1, c));        // up
            if (c + 1 < cols) list.push_back(id(r, c + 1)); // right
            if (r + 1 < rows) list.push_back(id(r + 1, c)); // down
            if (c > 0) list.push_back(id(r, c - 1));        // left
        }
    return RotationGraph::from_rotations(std::move(adj));
}

RotationGraph gen_cylinder(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0 || cols < 3)
        throw std::invalid_argument("cylinder needs rows >= 1, cols >= 3");
    const auto id = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(rows) * cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) {
            auto& list = adj[id(r, c)];
            if (r > 0) list.push_back(id(r - 1, c));
            list.push_back(id(r, (c + 1) % cols));
            if (r + 1 < rows) list.push_back(id(r + 1, c));
            list.push_back(id(r, (c + cols - 1) % cols));
        }
    return RotationGraph::from_rotations(std::move(adj));
}

RotationGraph gen_random_triangulation(std::uint32_t n, std::uint64_t seed) {
    if (n < 3)
        throw std::invalid_argument("random-triangulation needs n >= 3");
    SeededRng rng(seed);

    std::vector<std::vector<Vertex>> adj(n);
    adj[0] = {1, 2};
    adj[1] = {2, 0};
    adj[2] = {0, 1};
    struct Tri {
        Vertex a, b, c; // oriented: darts a->b, b->c, c->a trace the face
    };
    std::vector<Tri> faces = {{0, 1, 2}, {1, 0, 2}};

    const auto insert_after = [&adj](Vertex at, Vertex after, Vertex added) {
        auto& list = adj[at];
        const auto it = std::find(list.begin(), list.end(), after);
        list.insert(it + 1, added);
    };

    for (Vertex v = 3; v < n; ++v) {
        const std::size_t pick = rng.below(faces.size());
        const Tri f = faces[pick];
        insert_after(f.a, f.c, v);
        insert_after(f.b, f.a, v);
        insert_after(f.c, f.b, v);
        adj[v] = {f.a, f.c, f.b};
        faces[pick] = {f.a, f.b, v};
        faces.push_back({f.b, f.c, v});
        faces.push_back({f.c, f.a, v});
    }
    return RotationGraph::from_rotations(std::move(adj));
}

RotationGraph gen_big_face(std::uint32_t s, std::uint32_t chords, std::uint64_t seed) {
    if (s < 3)
        throw std::invalid_argument("big-face needs s >= 3");
    if (chords > s - 3)
        throw std::invalid_argument("big-face admits at most s-3 fan chords");
    SeededRng rng(seed);

    std::vector<Vertex> targets; // chord endpoints, in [2, s-2], distinct
    std::vector<char> used(s, 0);
    while (targets.size() < chords) {
        const auto j = static_cast<Vertex>(2 + rng.below(s - 3));
        if (!used[j]) {
            used[j] = 1;
            targets.push_back(j);
        }
    }
    std::sort(targets.begin(), targets.end());

    std::vector<std::vector<Vertex>> adj(s);
    for (Vertex i = 0; i < s; ++i)
        adj[i] = {(i + 1) % s, (i + s - 1) % s};
    // Fan chords live inside the face (0,1,...,s-1); at vertex 0 they sit
    // between s-1 and 1 in descending target order.
    for (auto it = targets.rbegin(); it != targets.rend(); ++it)
        adj[0].push_back(*it);
    for (const Vertex j : targets)
        adj[j].push_back(0);
    return RotationGraph::from_rotations(std::move(adj));
}

RotationGraph gen_tree(std::uint32_t n, std::uint64_t seed) {
    if (n == 0)
        throw std::invalid_argument("tree needs n >= 1");
    SeededRng rng(seed);
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 1; v < n; ++v) {
        const auto parent = static_cast<Vertex>(rng.below(v));
        adj[v].push_back(parent);
        adj[parent].push_back(v);
    }
    return RotationGraph::from_rotations(std::move(adj));
}

RotationGraph generate_family(std::string_view family, std::uint32_t n, std::uint64_t seed) {
    if (family == "grid" || family == "cylinder") {
        auto rows = static_cast<std::uint32_t>(std::lround(std::sqrt(static_cast<double>(n))));
        rows = std::max<std::uint32_t>(rows, 1);
        const auto cols = static_cast<std::uint32_t>((n + rows - 1) / rows);
        if (family == "grid")
            return gen_grid(rows, std::max<std::uint32_t>(cols, 1));
        return gen_cylinder(std::max<std::uint32_t>(rows, 1), std::max<std::uint32_t>(cols, 3));
    }
    if (family == "random-triangulation")
        return gen_random_triangulation(std::max<std::uint32_t>(n, 3), seed);
    if (family == "big-face")
        return gen_big_face(std::max<std::uint32_t>(n, 3),
                            std::min<std::uint32_t>(3, std::max<std::uint32_t>(n, 3) - 3), seed);
    if (family == "tree")
        return gen_tree(n, seed);
    throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

} // namespace plabel
