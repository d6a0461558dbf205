#include "plabel/labeling.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstring>

#include "plabel/gadget.hpp"
#include "plabel/separator.hpp"

namespace plabel {

namespace {

// bits needed for values 0..x-1
unsigned field_width(std::uint64_t x) {
    return x <= 2 ? 1u : static_cast<unsigned>(std::bit_width(x - 1));
}

struct Builder {
    Scheme scheme;
    std::uint32_t base_threshold;
    std::vector<BitStream>& streams; // indexed by original vertex id
    BuildStats stats;
    std::uint64_t largest_component = 0;

    void run(const RotationGraph& h, const std::vector<Vertex>& to_original,
             std::uint32_t depth) {
        const auto n_h = static_cast<std::uint32_t>(h.vertex_count());
        stats.depth = std::max(stats.depth, depth + 1);
        if (n_h <= base_threshold) {
            leaf_level(h, to_original);
            return;
        }

        const AugmentedGraph ag = augment_with_gadgets(h);
        const CycleSeparator cs = weighted_cycle_separator(ag);
        const SeparatorResult sep = project_separator(cs, ag, h);
        const auto c = static_cast<std::uint32_t>(sep.order.size());
        if (depth == 0 && n_h >= largest_component) {
            largest_component = n_h;
            stats.top_separator_size = c;
            stats.top_log_sum = sep.log_sum;
        }
        stats.max_log_sum_factor = std::max(
            stats.max_log_sum_factor, sep.log_sum / std::sqrt(static_cast<double>(n_h)));

        std::vector<char> in_sep(n_h, 0);
        for (const Vertex u : sep.order)
            in_sep[u] = 1;

        std::vector<std::uint64_t> level_start(n_h);
        for (Vertex v = 0; v < n_h; ++v)
            level_start[v] = streams[to_original[v]].bit_size();

        // One BFS per separator vertex; each vertex's stream grows in step,
        // so no distance matrix is ever materialized.
        const unsigned width = field_width(n_h);
        std::vector<Distance> prev, cur;
        std::vector<Vertex> scratch;
        for (std::uint32_t j = 0; j < c; ++j) {
            bfs_into(h, sep.order[j], cur, scratch);
            for (Vertex v = 0; v < n_h; ++v) {
                BitStream& out = streams[to_original[v]];
                assert(cur[v] >= 0); // h is connected
                if (j == 0) {
                    out.append_bit(false); // separator level
                    out.append_bit(in_sep[v]);
                    out.append_gamma(c);
                    if (scheme == Scheme::baseline) {
                        out.append_gamma(n_h);
                        out.append_bits(static_cast<std::uint64_t>(cur[v]), width);
                    } else {
                        out.append_gamma(static_cast<std::uint64_t>(cur[v]) + 1);
                    }
                } else if (scheme == Scheme::baseline) {
                    out.append_bits(static_cast<std::uint64_t>(cur[v]), width);
                } else {
                    out.append_signed(cur[v] - prev[v]);
                }
            }
            std::swap(prev, cur);
        }

        // Components of h minus the separator; ids dense in discovery order.
        constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> comp(n_h, kUnassigned);
        std::vector<std::vector<Vertex>> members;
        for (Vertex v = 0; v < n_h; ++v) {
            if (in_sep[v] || comp[v] != kUnassigned)
                continue;
            const auto id = static_cast<std::uint32_t>(members.size());
            members.emplace_back();
            comp[v] = id;
            std::vector<Vertex>& queue = members.back();
            queue.push_back(v);
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (const Vertex w : h.neighbors(queue[head]))
                    if (!in_sep[w] && comp[w] == kUnassigned) {
                        comp[w] = id;
                        queue.push_back(w);
                    }
        }
        for (Vertex v = 0; v < n_h; ++v)
            if (!in_sep[v])
                streams[to_original[v]].append_gamma(comp[v] + 1);

        if (scheme == Scheme::improved) {
            const double cap = kMaxLevelBitsFactor * std::sqrt(static_cast<double>(n_h));
            for (Vertex v = 0; v < n_h; ++v) {
                const double bits =
                    static_cast<double>(streams[to_original[v]].bit_size() - level_start[v]);
                if (bits > cap)
                    throw SeparatorError("level record exceeds the certified bit bound");
            }
        }

        for (auto& keep : members) {
            std::sort(keep.begin(), keep.end());
            SubEmbedding sub = induced_subembedding(h, keep);
            std::vector<Vertex> child_names(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i)
                child_names[i] = to_original[sub.to_old[i]];
            run(sub.graph, child_names, depth + 1);
        }
    }

    void leaf_level(const RotationGraph& h, const std::vector<Vertex>& to_original) {
        const auto n_h = static_cast<std::uint32_t>(h.vertex_count());
        const unsigned width = field_width(n_h);
        std::vector<Distance> dist;
        std::vector<Vertex> scratch;
        for (Vertex v = 0; v < n_h; ++v) {
            bfs_into(h, v, dist, scratch);
            BitStream& out = streams[to_original[v]];
            out.append_bit(true); // leaf level
            out.append_gamma(v + 1);
            out.append_gamma(n_h);
            for (Vertex w = 0; w < n_h; ++w) {
                if (w == v)
                    continue;
                assert(dist[w] >= 0);
                if (scheme == Scheme::baseline)
                    out.append_bits(static_cast<std::uint64_t>(dist[w]), width);
                else
                    out.append_gamma(static_cast<std::uint64_t>(dist[w]) + 1);
            }
        }
    }
};

} // namespace

LabelSet::LabelSet(Scheme scheme, std::uint64_t fingerprint, std::vector<BitStream> payloads)
    : scheme_(scheme), fingerprint_(fingerprint) {
    bit_offset_.resize(payloads.size() + 1, 0);
    BitStream blob;
    for (std::size_t v = 0; v < payloads.size(); ++v) {
        bit_offset_[v] = blob.bit_size();
        blob.append_stream(payloads[v]);
    }
    bit_offset_[payloads.size()] = blob.bit_size();
    payload_ = blob.bytes();
}

BitReader LabelSet::label_reader(Vertex v) const {
    if (v + 1 >= bit_offset_.size())
        throw FormatError("vertex id out of range for this label set");
    return BitReader(payload_, bit_offset_[v], bit_offset_[v + 1]);
}

std::uint64_t LabelSet::max_label_bits() const {
    std::uint64_t best = 0;
    for (std::uint64_t v = 0; v < size(); ++v)
        best = std::max(best, label_bits(static_cast<Vertex>(v)));
    return best;
}

double LabelSet::mean_label_bits() const {
    if (size() == 0)
        return 0;
    double total = 0;
    for (std::uint64_t v = 0; v < size(); ++v)
        total += static_cast<double>(label_bits(static_cast<Vertex>(v)));
    return total / static_cast<double>(size());
}

LabelSet build_labels(const RotationGraph& g, const BuildConfig& config, BuildStats* stats) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<BitStream> streams(n);

    const ComponentMap cm = connected_components(g);
    for (Vertex v = 0; v < n; ++v)
        streams[v].append_gamma(cm.component[v] + 1);

    Builder builder{config.scheme, std::max<std::uint32_t>(config.base_threshold, 1), streams,
                    {}, 0};
    std::vector<std::vector<Vertex>> members(cm.count);
    for (Vertex v = 0; v < n; ++v)
        members[cm.component[v]].push_back(v);
    for (const auto& keep : members) {
        SubEmbedding sub = induced_subembedding(g, keep);
        builder.run(sub.graph, sub.to_old, 0);
    }

    // Depth certificate: every component shrinks by a factor >= 3/2.
    if (n > builder.base_threshold) {
        const double limit = std::ceil(std::log(static_cast<double>(n) / builder.base_threshold) /
                                       std::log(1.5)) +
                             1;
        if (builder.stats.depth > limit)
            throw SeparatorError("recursion depth " + std::to_string(builder.stats.depth) +
                                 " exceeds the separator balance bound");
    }

    LabelSet set(config.scheme, g.fingerprint(), std::move(streams));
    if (config.scheme == Scheme::improved && n > 0) {
        const double cap = kMaxLabelBitsFactor * std::sqrt(static_cast<double>(n));
        if (static_cast<double>(set.max_label_bits()) > cap)
            throw SeparatorError("label exceeds the certified size bound");
    }
    if (stats)
        *stats = builder.stats;
    return set;
}

LabelSet build_labels_baseline(const RotationGraph& g, BuildStats* stats) {
    BuildConfig config;
    config.scheme = Scheme::baseline;
    return build_labels(g, config, stats);
}

std::vector<std::vector<Distance>> separator_distances(const RotationGraph& g,
                                                       std::span<const Vertex> order) {
    std::vector<std::vector<Distance>> rows(g.vertex_count(),
                                            std::vector<Distance>(order.size(), kUnreachable));
    std::vector<Distance> dist;
    std::vector<Vertex> scratch;
    for (std::size_t j = 0; j < order.size(); ++j) {
        bfs_into(g, order[j], dist, scratch);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            rows[v][j] = dist[v];
    }
    return rows;
}

namespace {

constexpr char kMagic[8] = {'p', 'l', 'a', 'n', 'l', 'b', 'l', 'f'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t x) {
    out.push_back(static_cast<std::uint8_t>(x & 0xff));
    out.push_back(static_cast<std::uint8_t>(x >> 8));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t x) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>((x >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
    std::uint64_t x = 0;
    for (int i = 7; i >= 0; --i)
        x = (x << 8) | in[at + static_cast<std::size_t>(i)];
    return x;
}

std::uint64_t checksum(std::span<const std::uint8_t> bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (const std::uint8_t b : bytes) {
        hash ^= b;
        hash *= 1099511628211ull;
    }
    return hash;
}

} // namespace

std::vector<std::uint8_t> serialize_labels(const LabelSet& labels) {
    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 8);
    put_u16(out, kVersion);
    out.push_back(static_cast<std::uint8_t>(labels.scheme_));
    out.insert(out.end(), 5, 0); // reserved
    put_u64(out, labels.size());
    put_u64(out, labels.fingerprint_);
    put_u64(out, labels.bit_offset_.empty() ? 0 : labels.bit_offset_.back());
    for (const std::uint64_t off : labels.bit_offset_)
        put_u64(out, off);
    out.insert(out.end(), labels.payload_.begin(), labels.payload_.end());
    put_u64(out, checksum(out));
    return out;
}

LabelSet deserialize_labels(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 48)
        throw FormatError("label file truncated");
    if (std::memcmp(bytes.data(), kMagic, 8) != 0)
        throw FormatError("bad magic bytes");
    const std::uint16_t version = static_cast<std::uint16_t>(bytes[8] | (bytes[9] << 8));
    if (version != kVersion)
        throw FormatError("unsupported format version " + std::to_string(version));
    if (bytes[10] > 1)
        throw FormatError("unknown scheme tag");

    const std::uint64_t stored_sum = get_u64(bytes, bytes.size() - 8);
    if (checksum(bytes.subspan(0, bytes.size() - 8)) != stored_sum)
        throw FormatError("checksum mismatch");

    LabelSet set;
    set.scheme_ = static_cast<Scheme>(bytes[10]);
    const std::uint64_t n = get_u64(bytes, 16);
    if (n > bytes.size())
        throw FormatError("vertex count exceeds the file size");
    set.fingerprint_ = get_u64(bytes, 24);
    const std::uint64_t total_bits = get_u64(bytes, 32);

    const std::uint64_t payload_bytes = (total_bits + 7) / 8;
    const std::uint64_t expected = 40 + 8 * (n + 1) + payload_bytes + 8;
    if (bytes.size() != expected)
        throw FormatError("label file size mismatch");

    set.bit_offset_.resize(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i)
        set.bit_offset_[i] = get_u64(bytes, 40 + 8 * i);
    if (set.bit_offset_[0] != 0 || set.bit_offset_[n] != total_bits)
        throw FormatError("corrupt offset table");
    for (std::uint64_t i = 0; i < n; ++i)
        if (set.bit_offset_[i] > set.bit_offset_[i + 1])
            throw FormatError("offset table not monotone");

    const std::size_t payload_at = 40 + 8 * (n + 1);
    set.payload_.assign(bytes.begin() + static_cast<std::ptrdiff_t>(payload_at),
                        bytes.begin() + static_cast<std::ptrdiff_t>(payload_at + payload_bytes));
    return set;
}

ParsedLabel parse_label(const LabelSet& labels, Vertex v) {
    BitReader r = labels.label_reader(v);
    const bool baseline = labels.scheme() == Scheme::baseline;

    ParsedLabel parsed;
    parsed.top_component = static_cast<std::uint32_t>(r.read_gamma() - 1);
    while (true) {
        LevelRecord rec;
        rec.leaf = r.read_bit();
        if (rec.leaf) {
            rec.position = static_cast<std::uint32_t>(r.read_gamma() - 1);
            const std::uint64_t size = r.read_gamma();
            const unsigned width = field_width(size);
            for (std::uint64_t i = 0; i + 1 < size; ++i)
                rec.table.push_back(baseline
                                        ? static_cast<Distance>(r.read_bits(width))
                                        : static_cast<Distance>(r.read_gamma() - 1));
            parsed.levels.push_back(std::move(rec));
            return parsed;
        }
        rec.in_separator = r.read_bit();
        const std::uint64_t c = r.read_gamma();
        if (baseline) {
            const std::uint64_t level_n = r.read_gamma();
            const unsigned width = field_width(level_n);
            for (std::uint64_t j = 0; j < c; ++j)
                rec.separator_row.push_back(static_cast<Distance>(r.read_bits(width)));
        } else {
            Distance d = static_cast<Distance>(r.read_gamma()) - 1;
            rec.separator_row.push_back(d);
            for (std::uint64_t j = 1; j < c; ++j) {
                d += r.read_signed();
                rec.separator_row.push_back(d);
            }
        }
        const bool ends = rec.in_separator;
        if (!ends)
            rec.component_id = static_cast<std::uint32_t>(r.read_gamma() - 1);
        parsed.levels.push_back(std::move(rec));
        if (ends)
            return parsed;
    }
}

} // namespace plabel
