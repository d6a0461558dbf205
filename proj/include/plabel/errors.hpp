#pragma once

#include <stdexcept>
#include <string>

namespace plabel {

// Malformed text in a graph file.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

// Rotation system is not a valid planar embedding (asymmetric lists,
// self-loops, edge bound, Euler check).
class EmbeddingError : public std::runtime_error {
public:
    explicit EmbeddingError(const std::string& msg) : std::runtime_error("embedding error: " + msg) {}
};

// Gadget requested for an unsupported cycle size.
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& msg) : std::runtime_error("size error: " + msg) {}
};

// Separator machinery failed an internal guarantee. Indicates a bug, not
// bad input; surfaced loudly instead of degrading.
class SeparatorError : public std::runtime_error {
public:
    explicit SeparatorError(const std::string& msg) : std::runtime_error("separator error: " + msg) {}
};

// Bit stream under/overrun while decoding a codeword.
class CodecError : public std::runtime_error {
public:
    explicit CodecError(const std::string& msg) : std::runtime_error("codec error: " + msg) {}
};

// Label file framing problem: bad magic, version, checksum, truncation or
// mismatched graph fingerprints.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error("format error: " + msg) {}
};

} // namespace plabel
