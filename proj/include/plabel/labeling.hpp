#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plabel/bitstream.hpp"
#include "plabel/rotation_graph.hpp"

namespace plabel {

enum class Scheme : std::uint8_t {
    improved = 0, // difference stream: first distance, then signed deltas
    baseline = 1, // fixed-width distance array per separator level
};

struct BuildConfig {
    Scheme scheme = Scheme::improved;
    std::uint32_t base_threshold = 16; // components this small store explicit tables
};

// Certified per-build bounds for the improved scheme, enforced on every
// build. Measured maxima across the generator families up to n = 10^5 are
// about 24*sqrt(n) per label (cylinders) and 7*sqrt(n_level) per level, so
// these carry >2x headroom.
inline constexpr double kMaxLevelBitsFactor = 48.0; // level bits <= 48*sqrt(n_level)
inline constexpr double kMaxLabelBitsFactor = 64.0; // label bits <= 64*sqrt(n)

// Immutable set of per-vertex labels over one graph build. Payloads live in
// a single bit blob with a per-vertex offset table, so one label can be
// sliced out without scanning the rest.
//
// Label payload, improved scheme (all codes from plabel/bitstream.hpp):
//   gamma(top_component + 1)
//   per level:
//     1 bit: 1 = leaf level, 0 = separator level
//     leaf:      gamma(position + 1)  -- this vertex's index in its component
//                gamma(size)          -- component size
//                (size - 1) x gamma(dist + 1), distances to the other
//                component vertices in id order (self omitted); ends the label
//     separator: 1 bit in_separator
//                gamma(c)             -- separator size
//                gamma(dist_to_u1 + 1)
//                (c - 1) x signed(dist_to_u[j+1] - dist_to_u[j])
//                if in_separator: ends the label
//                else: gamma(component_id + 1), next level follows
// The baseline scheme replaces the distance payloads with fixed-width fields:
// leaf entries use width(size), separator levels store gamma(level_n) after
// gamma(c) and then c distances of width(level_n), where width(x) is the bit
// count of x-1.
class LabelSet {
public:
    LabelSet() = default;
    LabelSet(Scheme scheme, std::uint64_t fingerprint, std::vector<BitStream> payloads);

    Scheme scheme() const { return scheme_; }
    std::uint64_t fingerprint() const { return fingerprint_; }
    std::uint64_t size() const { return bit_offset_.empty() ? 0 : bit_offset_.size() - 1; }

    std::uint64_t label_bits(Vertex v) const { return bit_offset_[v + 1] - bit_offset_[v]; }
    std::uint64_t max_label_bits() const;
    double mean_label_bits() const;

    BitReader label_reader(Vertex v) const;

    const std::vector<std::uint64_t>& bit_offsets() const { return bit_offset_; }
    const std::vector<std::uint8_t>& payload() const { return payload_; }

    friend std::vector<std::uint8_t> serialize_labels(const LabelSet& labels);
    friend LabelSet deserialize_labels(std::span<const std::uint8_t> bytes);

private:
    Scheme scheme_ = Scheme::improved;
    std::uint64_t fingerprint_ = 0;
    std::vector<std::uint64_t> bit_offset_; // n + 1 entries
    std::vector<std::uint8_t> payload_;
};

struct BuildStats {
    std::uint32_t depth = 0;             // deepest level count over all vertices
    std::uint32_t top_separator_size = 0; // c of the largest component's top level
    double top_log_sum = 0;
    // max over every recursion level of log_sum / sqrt(level size)
    double max_log_sum_factor = 0;
};

// Labels for every vertex of g. Decoding any two of them yields the exact
// distance (or kUnreachable across components). Deterministic: the same
// graph always produces the same bits.
LabelSet build_labels(const RotationGraph& g, const BuildConfig& config = {},
                      BuildStats* stats = nullptr);

// Fixed-width variant kept for size comparison; decodes identically.
LabelSet build_labels_baseline(const RotationGraph& g, BuildStats* stats = nullptr);

// Distance rows from every vertex of g to each separator vertex, in
// separator order: result[v][j] = dist_G(v, order[j]).
std::vector<std::vector<Distance>> separator_distances(const RotationGraph& g,
                                                       std::span<const Vertex> order);

// Label file: magic, version, scheme, n, graph fingerprint, bit-offset
// table, payload blob, FNV-1a checksum. Little-endian, bit-exact.
std::vector<std::uint8_t> serialize_labels(const LabelSet& labels);
LabelSet deserialize_labels(std::span<const std::uint8_t> bytes);

// Decoded view of one label, for inspection and tests.
struct LevelRecord {
    bool leaf = false;
    bool in_separator = false;
    std::uint32_t component_id = 0;       // separator levels that continue
    std::vector<Distance> separator_row;  // distances to u_1..u_c
    std::uint32_t position = 0;           // leaf levels
    std::vector<Distance> table;          // leaf levels: distances, self omitted
};

struct ParsedLabel {
    std::uint32_t top_component = 0;
    std::vector<LevelRecord> levels;
};

ParsedLabel parse_label(const LabelSet& labels, Vertex v);

} // namespace plabel
