#pragma once

#include "knaprsa/bitstring.hpp"
#include "knaprsa/knapsack.hpp"
#include "knaprsa/rng.hpp"

#include <cstddef>

namespace knaprsa {

// Geometry of the processed message: h data blocks of v bits
// interleaved with k-h confuse blocks of s bits, L bits total.
struct BlockLayout {
    std::size_t k = 0;
    std::size_t h = 0;
    std::size_t v = 0;        // data block length, k/h
    std::size_t s = 0;        // confuse block length
    std::size_t total = 0;    // L = k + (k-h)*s
    std::size_t n_bits = 0;

    bool operator==(const BlockLayout&) const = default;
};

// Uniform k-bit mask with exactly h ones. Requires h | k and 0 < h < k.
MaskVector gen_mask(std::size_t k, std::size_t h, Rng& rng);

// v = k/h, s = floor((n_bits - 1 - k) / (k - h)), L = k + (k-h)*s.
// Capping L at n_bits - 1 keeps the numeric value of every processed
// message below the RSA modulus. Throws ModulusTooSmallError when
// s < 1 and ParamError on invalid (k, h).
BlockLayout block_params(std::size_t k, std::size_t h, std::size_t n_bits);

// Mask-XOR then interleave: m XOR X is split left-to-right into h
// v-bit data blocks; slot i of the output carries the next unconsumed
// data block when x_i = 1 and a fresh random s-bit confuse block when
// x_i = 0.
BitString encode_message(const BitString& m, const MaskVector& x,
                         const BlockLayout& layout, Rng& rng);

// Exact inverse: consume v bits per 1-slot, skip s bits per 0-slot,
// XOR the reassembled string with X.
BitString decode_message(const BitString& m_prime, const MaskVector& x,
                         const BlockLayout& layout);

} // namespace knaprsa
