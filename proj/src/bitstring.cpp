#include "knaprsa/bitstring.hpp"

#include "knaprsa/errors.hpp"

#include <algorithm>

namespace knaprsa {

BitString BitString::from_string(std::string_view s) {
    BitString out;
    out.bits_.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1') {
            throw ParamError("bit string may contain only '0' and '1'");
        }
        out.bits_.push_back(static_cast<std::uint8_t>(ch == '1'));
    }
    return out;
}

BitString BitString::from_nat(const Nat& v, std::size_t len) {
    if (v < 0 || bit_length(v) > len) {
        throw DomainError("value does not fit in the requested bit length");
    }
    BitString out(len);
    for (std::size_t i = 0; i < len; ++i) {
        // Bit 0 of the value is the rightmost position.
        if (mpz_tstbit(v.get_mpz_t(), i)) {
            out.bits_[len - 1 - i] = 1;
        }
    }
    return out;
}

Nat BitString::to_nat() const {
    const std::size_t len = bits_.size();
    if (len == 0) {
        return Nat(0);
    }
    // Pack MSB-first bits into big-endian bytes for a single import.
    const std::size_t nbytes = (len + 7) / 8;
    std::vector<std::uint8_t> bytes(nbytes, 0);
    const std::size_t pad = nbytes * 8 - len;   // phantom leading zeros
    for (std::size_t i = 0; i < len; ++i) {
        if (bits_[i]) {
            const std::size_t pos = i + pad;
            bytes[pos / 8] |= static_cast<std::uint8_t>(0x80u >> (pos % 8));
        }
    }
    Nat v;
    mpz_import(v.get_mpz_t(), nbytes, 1 /*MSB first*/, 1, 0, 0, bytes.data());
    return v;
}

std::string BitString::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out[i] = '1';
        }
    }
    return out;
}

std::size_t BitString::popcount() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > bits_.size()) {
        throw ParamError("slice out of range");
    }
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                     bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
}

BitString BitString::operator^(const BitString& other) const {
    if (bits_.size() != other.bits_.size()) {
        throw ParamError("XOR of bit strings with different lengths");
    }
    BitString out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out.bits_[i] = bits_[i] ^ other.bits_[i];
    }
    return out;
}

BitString BitString::with_flipped(std::size_t i) const {
    if (i >= bits_.size()) {
        throw ParamError("flip position out of range");
    }
    BitString out = *this;
    out.bits_[i] ^= 1;
    return out;
}

std::size_t BitString::hamming_distance(const BitString& other) const {
    if (bits_.size() != other.bits_.size()) {
        throw ParamError("Hamming distance of bit strings with different lengths");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        d += bits_[i] != other.bits_[i];
    }
    return d;
}

} // namespace knaprsa
