#pragma once

#include "knaprsa/nat.hpp"
#include "knaprsa/rng.hpp"

#include <cstddef>

namespace knaprsa {

// base^exp mod modulus by square-and-multiply. modulus >= 2.
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus);

// x in [1, m-1] with a*x = 1 (mod m), via the extended Euclidean
// algorithm. Throws InvalidModulusError for m < 2 and NoInverseError
// when gcd(a, m) != 1.
Nat mod_inverse(const Nat& a, const Nat& m);

// Deterministic trial division below a fixed threshold, Miller-Rabin
// above it (error probability <= 4^-rounds). Bases are drawn from a
// stream seeded by n itself, so results are reproducible.
bool is_probable_prime(const Nat& n, int rounds);

// Number of Miller-Rabin rounds used throughout key generation.
inline constexpr int kPrimeTestRounds = 64;

// Random prime with exactly `bits` bits (top bit forced). With safe,
// (p-1)/2 is also prime. bits >= 3, or >= 4 when safe. Retries are
// bounded; exhaustion throws GenerationTimeoutError.
Nat gen_prime(std::size_t bits, bool safe, Rng& rng);

} // namespace knaprsa
