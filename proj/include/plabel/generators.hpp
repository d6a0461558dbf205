#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "plabel/rotation_graph.hpp"

namespace plabel {

// Deterministic RNG wrapper. mt19937_64 output is specified bit-exactly by
// the standard; rejection sampling keeps below() portable across libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound)

private:
    std::mt19937_64 engine_;
};

// rows x cols grid, n = rows*cols, m = rows*(cols-1) + cols*(rows-1).
RotationGraph gen_grid(std::uint32_t rows, std::uint32_t cols);

// rows rings of cols vertices with column wraparound; cols >= 3.
RotationGraph gen_cylinder(std::uint32_t rows, std::uint32_t cols);

// Maximal planar graph (m = 3n-6) grown by inserting each new vertex into a
// uniformly random face of the current triangulation; n >= 3.
RotationGraph gen_random_triangulation(std::uint32_t n, std::uint64_t seed);

// Cycle C_s plus `chords` random non-crossing chords fanned from vertex 0.
// Keeps one face of size s, stressing the large-face gadgets.
RotationGraph gen_big_face(std::uint32_t s, std::uint32_t chords, std::uint64_t seed);

// Uniform random recursive tree: vertex i attaches to a parent in [0, i).
RotationGraph gen_tree(std::uint32_t n, std::uint64_t seed);

// Family dispatch by name ("grid", "cylinder", "random-triangulation",
// "big-face", "tree") targeting roughly n vertices: grid/cylinder use
// near-square dimensions. Throws std::invalid_argument for unknown names
// or sizes the family cannot realize.
RotationGraph generate_family(std::string_view family, std::uint32_t n, std::uint64_t seed);

} // namespace plabel
