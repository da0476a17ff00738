#pragma once

#include "knaprsa/nat.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knaprsa {

// Fixed-length bit sequence. Position 0 is the leftmost / most
// significant bit, so a BitString keeps its leading zeros and is not
// identified with its numeric value.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t len) : bits_(len, 0) {}

    // From a string of '0'/'1' characters, e.g. "1011".
    static BitString from_string(std::string_view s);

    // len-bit big-endian representation of v; throws DomainError when
    // v >= 2^len.
    static BitString from_nat(const Nat& v, std::size_t len);

    Nat to_nat() const;
    std::string to_string() const;

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int bit(std::size_t i) const { return bits_[i]; }
    void set_bit(std::size_t i, int v) { bits_[i] = static_cast<std::uint8_t>(v != 0); }

    std::size_t popcount() const;

    void append_bit(int v) { bits_.push_back(static_cast<std::uint8_t>(v != 0)); }
    void append(const BitString& other);

    // len bits starting at pos.
    BitString slice(std::size_t pos, std::size_t len) const;

    // Bitwise XOR; lengths must match (ParamError otherwise).
    BitString operator^(const BitString& other) const;

    // Flip a single bit, returning the modified copy.
    BitString with_flipped(std::size_t i) const;

    std::size_t hamming_distance(const BitString& other) const;

    bool operator==(const BitString& other) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace knaprsa
