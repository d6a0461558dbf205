#pragma once

#include <cstdint>

#include "plabel/labeling.hpp"

namespace plabel {

// One label plus the framing facts needed to decode it against another.
struct LabelView {
    Scheme scheme = Scheme::improved;
    std::uint64_t fingerprint = 0;
    BitReader reader;
};

LabelView label_view(const LabelSet& labels, Vertex v);

// Exact distance from the two labels alone: walks both level streams in
// lockstep, folds min(a_j + b_j) over every shared separator row, and stops
// at a leaf table, a separator membership, or diverging component ids.
// Returns kUnreachable for vertices in different components. Cost is linear
// in the label bits consumed (reported via bits_used when given).
// Throws FormatError on mismatched fingerprints/schemes or corrupt streams.
Distance decode_distance(LabelView a, LabelView b, std::uint64_t* bits_used = nullptr);

Distance decode_distance(const LabelSet& labels, Vertex u, Vertex v);

} // namespace plabel
