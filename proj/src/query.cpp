#include "plabel/query.hpp"

#include <algorithm>
#include <bit>

namespace plabel {

namespace {

// bits needed for values 0..x-1; mirrors the label writer
unsigned field_width(std::uint64_t x) {
    return x <= 2 ? 1u : static_cast<unsigned>(std::bit_width(x - 1));
}

Distance decode_impl(LabelView& a, LabelView& b) {
    if (a.fingerprint != b.fingerprint)
        throw FormatError("labels come from different graph builds");
    if (a.scheme != b.scheme)
        throw FormatError("labels come from different schemes");
    const bool baseline = a.scheme == Scheme::baseline;

    const std::uint64_t top_a = a.reader.read_gamma();
    const std::uint64_t top_b = b.reader.read_gamma();
    if (top_a != top_b)
        return kUnreachable;

    Distance best = std::numeric_limits<Distance>::max();
    while (true) {
        const bool leaf_a = a.reader.read_bit();
        const bool leaf_b = b.reader.read_bit();
        if (leaf_a != leaf_b)
            throw FormatError("label level structures diverge");

        if (leaf_a) {
            const std::uint64_t pos_a = a.reader.read_gamma() - 1;
            const std::uint64_t size_a = a.reader.read_gamma();
            const std::uint64_t pos_b = b.reader.read_gamma() - 1;
            const std::uint64_t size_b = b.reader.read_gamma();
            if (size_a != size_b || pos_a >= size_a || pos_b >= size_b)
                throw FormatError("inconsistent leaf levels");
            if (pos_a == pos_b)
                return std::min<Distance>(best, 0);
            // a's table omits a's own slot
            const std::uint64_t index = pos_b - (pos_b > pos_a ? 1 : 0);
            const unsigned width = field_width(size_a);
            Distance d = 0;
            for (std::uint64_t i = 0; i <= index; ++i)
                d = baseline ? static_cast<Distance>(a.reader.read_bits(width))
                             : static_cast<Distance>(a.reader.read_gamma() - 1);
            return std::min(best, d);
        }

        const bool in_sep_a = a.reader.read_bit();
        const bool in_sep_b = b.reader.read_bit();
        const std::uint64_t c_a = a.reader.read_gamma();
        const std::uint64_t c_b = b.reader.read_gamma();
        if (c_a != c_b)
            throw FormatError("separator sizes diverge");

        if (baseline) {
            const std::uint64_t na = a.reader.read_gamma();
            const std::uint64_t nb = b.reader.read_gamma();
            if (na != nb)
                throw FormatError("level sizes diverge");
            const unsigned width = field_width(na);
            for (std::uint64_t j = 0; j < c_a; ++j) {
                const auto da = static_cast<Distance>(a.reader.read_bits(width));
                const auto db = static_cast<Distance>(b.reader.read_bits(width));
                best = std::min(best, da + db);
            }
        } else {
            Distance da = static_cast<Distance>(a.reader.read_gamma()) - 1;
            Distance db = static_cast<Distance>(b.reader.read_gamma()) - 1;
            best = std::min(best, da + db);
            for (std::uint64_t j = 1; j < c_a; ++j) {
                da += a.reader.read_signed();
                db += b.reader.read_signed();
                best = std::min(best, da + db);
            }
        }

        if (in_sep_a || in_sep_b)
            return best; // the separator vertex's own row reached the optimum
        const std::uint64_t comp_a = a.reader.read_gamma();
        const std::uint64_t comp_b = b.reader.read_gamma();
        if (comp_a != comp_b)
            return best; // every connecting path crosses this separator
    }
}

} // namespace

LabelView label_view(const LabelSet& labels, Vertex v) {
    return LabelView{labels.scheme(), labels.fingerprint(), labels.label_reader(v)};
}

Distance decode_distance(LabelView a, LabelView b, std::uint64_t* bits_used) {
    try {
        const Distance d = decode_impl(a, b);
        if (bits_used)
            *bits_used = a.reader.bits_consumed() + b.reader.bits_consumed();
        return d;
    } catch (const CodecError& e) {
        throw FormatError(std::string("truncated label stream: ") + e.what());
    }
}

Distance decode_distance(const LabelSet& labels, Vertex u, Vertex v) {
    return decode_distance(label_view(labels, u), label_view(labels, v));
}

} // namespace plabel
