#include "knaprsa/rng.hpp"

#include "knaprsa/errors.hpp"

#include <vector>

namespace knaprsa {

std::uint64_t Rng::below_u64(std::uint64_t bound) {
    if (bound == 0) {
        throw ParamError("below_u64: bound must be positive");
    }
    // Reject the tail that would bias the modulo.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    for (;;) {
        std::uint64_t u = next_u64();
        if (u <= limit) {
            return u % bound;
        }
    }
}

Nat Rng::bits(std::size_t nbits) {
    if (nbits == 0) {
        return Nat(0);
    }
    const std::size_t words = (nbits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    for (auto& w : buf) {
        w = next_u64();
    }
    const std::size_t top = nbits % 64;
    if (top != 0) {
        buf.back() &= (std::uint64_t(1) << top) - 1;
    }
    Nat v;
    mpz_import(v.get_mpz_t(), words, -1 /*LSW first*/, sizeof(std::uint64_t),
               0 /*native endian*/, 0, buf.data());
    return v;
}

Nat Rng::below(const Nat& bound) {
    if (bound <= 0) {
        throw ParamError("below: bound must be positive");
    }
    const std::size_t nbits = bit_length(bound);
    for (;;) {
        Nat v = bits(nbits);
        if (v < bound) {
            return v;
        }
    }
}

std::uint64_t SplitMix64Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64Rng mix(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
    return mix.next_u64();
}

} // namespace knaprsa
