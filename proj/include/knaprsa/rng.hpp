#pragma once

#include "knaprsa/nat.hpp"

#include <cstdint>
#include <cstddef>

namespace knaprsa {

// Deterministic random source. Every randomized operation takes one of
// these explicitly, so a fixed seed reproduces keys, ciphertexts and
// experiment reports bit-for-bit. Tests substitute scripted subclasses.
//
// All helpers consume whole 64-bit words from next_u64(); none keep
// internal bit buffers, which keeps consumption patterns predictable.
class Rng {
public:
    virtual ~Rng() = default;

    virtual std::uint64_t next_u64() = 0;

    // Single uniform bit.
    int next_bit() { return static_cast<int>(next_u64() & 1u); }

    // Uniform in [0, bound); bound >= 1. Rejection-sampled.
    std::uint64_t below_u64(std::uint64_t bound);

    // Uniform Nat in [0, bound); bound >= 1.
    Nat below(const Nat& bound);

    // Uniform Nat in [0, 2^nbits).
    Nat bits(std::size_t nbits);
};

// splitmix64; tiny state, full 64-bit output, good enough for
// statistical experiments (not a CSPRNG; see module non-goals).
class SplitMix64Rng final : public Rng {
public:
    explicit SplitMix64Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() override;

private:
    std::uint64_t state_;
};

// Stable per-index substream seed, used to make experiment trials
// independent of execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace knaprsa
