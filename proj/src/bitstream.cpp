#include "plabel/bitstream.hpp"

#include <bit>
#include <cstring>

namespace plabel {

void BitStream::append_bit(bool bit) {
    if ((bit_size_ & 7) == 0)
        bytes_.push_back(0);
    if (bit)
        bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (bit_size_ & 7)));
    ++bit_size_;
}

void BitStream::append_bits(std::uint64_t value, unsigned count) {
    for (unsigned i = count; i-- > 0;)
        append_bit((value >> i) & 1u);
}

void BitStream::append_gamma(std::uint64_t value) {
    if (value == 0)
        throw CodecError("gamma code is undefined for 0");
    const unsigned width = std::bit_width(value); // floor(log2 v) + 1
    append_bits(0, width - 1);
    append_bits(value, width);
}

void BitStream::append_signed(std::int64_t value) {
    const std::uint64_t mapped = value <= 0
        ? 2 * static_cast<std::uint64_t>(-value) + 1
        : 2 * static_cast<std::uint64_t>(value);
    append_gamma(mapped);
}

void BitStream::append_stream(const BitStream& other) {
    for (std::size_t i = 0; i < other.bit_size(); ++i)
        append_bit(other.bit_at(i));
}

void BitReader::reload() {
    const std::size_t byte_at = pos_ >> 3;
    std::uint64_t window = 0;
    std::size_t loaded;
    if (byte_at + 8 <= bytes_.size()) {
        loaded = 8;
        std::memcpy(&window, bytes_.data() + byte_at, 8);
        if constexpr (std::endian::native == std::endian::little)
            window = __builtin_bswap64(window);
    } else {
        loaded = bytes_.size() - byte_at;
        for (std::size_t i = 0; i < loaded; ++i)
            window = (window << 8) | bytes_[byte_at + i];
        window <<= 8 * (8 - loaded);
    }
    window <<= (pos_ & 7); // drop already-consumed bits of the first byte
    const std::size_t left = bit_size_ - pos_;
    window_bits_ =
        static_cast<unsigned>(std::min<std::size_t>(left, 8 * loaded - (pos_ & 7)));
    // mask anything past the stream end (it may belong to a neighbor label)
    window_ = window_bits_ == 0 ? 0 : window & (~std::uint64_t{0} << (64 - window_bits_));
}

std::uint64_t BitReader::take(unsigned count) {
    if (window_bits_ < count) {
        reload();
        if (window_bits_ < count)
            throw CodecError("read past end of stream");
    }
    const std::uint64_t value = window_ >> (64 - count);
    consume(count);
    return value;
}

bool BitReader::read_bit() {
    return take(1) != 0;
}

std::uint64_t BitReader::read_bits(unsigned count) {
    if (count == 0)
        return 0;
    if (count <= 57)
        return take(count);
    const std::uint64_t high = take(count - 32);
    return (high << 32) | take(32);
}

std::uint64_t BitReader::read_gamma() {
    unsigned zeros = 0;
    while (true) {
        if (window_bits_ == 0) {
            reload();
            if (window_bits_ == 0)
                throw CodecError("read past end of stream");
        }
        const auto run = static_cast<unsigned>(std::countl_zero(window_));
        if (run >= window_bits_) {
            zeros += window_bits_;
            consume(window_bits_);
        } else {
            zeros += run;
            consume(run);
            break;
        }
        if (zeros > 63)
            throw CodecError("gamma prefix longer than 63 bits");
    }
    if (zeros > 63)
        throw CodecError("gamma prefix longer than 63 bits");
    return read_bits(zeros + 1);
}

std::int64_t BitReader::read_signed() {
    const std::uint64_t mapped = read_gamma();
    if (mapped & 1u)
        return -static_cast<std::int64_t>((mapped - 1) / 2);
    return static_cast<std::int64_t>(mapped / 2);
}

unsigned gamma_length(std::uint64_t value) {
    return 2 * static_cast<unsigned>(std::bit_width(value)) - 1;
}

unsigned signed_length(std::int64_t value) {
    const std::uint64_t mapped = value <= 0
        ? 2 * static_cast<std::uint64_t>(-value) + 1
        : 2 * static_cast<std::uint64_t>(value);
    return gamma_length(mapped);
}

} // namespace plabel
