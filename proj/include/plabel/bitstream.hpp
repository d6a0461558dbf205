#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "plabel/errors.hpp"

namespace plabel {

// Append-only bit sequence, MSB-first within each byte. The byte-serialized
// form (zero padding in the last byte) is the on-disk label payload encoding.
//
// Codes:
//   gamma(x), x >= 1:  floor(log2 x) zero bits, then the binary digits of x
//                      from the most significant down. 1 -> "1", 5 -> "00101".
//                      Length is 2*floor(log2 x) + 1 bits.
//   signed(d):         zig-zag map d -> (d <= 0 ? -2d+1 : 2d), then gamma.
//                      0 -> "1", -1 -> "011", 1 -> "01" + ... (gamma(2)).
class BitStream {
public:
    BitStream() = default;

    void append_bit(bool bit);
    // Appends the low `count` bits of `value`, most significant first.
    void append_bits(std::uint64_t value, unsigned count);
    void append_gamma(std::uint64_t value); // value >= 1
    void append_signed(std::int64_t value);
    void append_stream(const BitStream& other);

    std::size_t bit_size() const { return bit_size_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    bool bit_at(std::size_t index) const {
        return (bytes_[index >> 3] >> (7 - (index & 7))) & 1u;
    }

    bool operator==(const BitStream& other) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_size_ = 0;
};

// Cursor over a bit sequence. Reads past the end throw CodecError. Keeps a
// consumed-bits counter so callers can bound decode cost.
class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_size)
        : bytes_(bytes), bit_size_(bit_size) {}
    // Window into a larger buffer, starting at bit `first` (inclusive).
    BitReader(std::span<const std::uint8_t> bytes, std::size_t first, std::size_t last)
        : bytes_(bytes), bit_size_(last), pos_(first), start_(first) {}

    explicit BitReader(const BitStream& s) : BitReader(s.bytes(), s.bit_size()) {}

    bool read_bit();
    std::uint64_t read_bits(unsigned count); // count <= 64
    std::uint64_t read_gamma();
    std::int64_t read_signed();

    bool at_end() const { return pos_ == bit_size_; }
    std::size_t bits_consumed() const { return pos_ - start_; }

private:
    // Cached upcoming bits: window_ holds the next window_bits_ stream bits
    // left-aligned; bits past the stream end are masked to zero. pos_ stays
    // the source of truth, so reloading is always safe.
    void reload();
    void consume(unsigned count) {
        window_ <<= count;
        window_bits_ -= count;
        pos_ += count;
    }
    std::uint64_t take(unsigned count); // count <= 57

    std::span<const std::uint8_t> bytes_;
    std::size_t bit_size_;
    std::size_t pos_ = 0;
    std::size_t start_ = 0;
    std::uint64_t window_ = 0;
    unsigned window_bits_ = 0;
};

// Number of bits append_gamma(x) writes.
unsigned gamma_length(std::uint64_t value);
// Number of bits append_signed(d) writes. At most 3 + 2*log2(1 + |d|).
unsigned signed_length(std::int64_t value);

} // namespace plabel
