#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace knaprsa {

// Arbitrary-precision nonnegative integer. GMP supplies the limb
// arithmetic; all number-theoretic algorithms live in numtheory.hpp.
// Library entry points never produce negative values.
using Nat = mpz_class;

// Lowercase big-endian hex without leading zeros; zero encodes as "0".
std::string to_hex(const Nat& v);

// Strict inverse of to_hex: nonempty, lowercase [0-9a-f] only, no
// leading zeros (except the single digit "0"). Throws ParseError.
Nat nat_from_hex(std::string_view hex);

// Number of bits in v; bit_length(0) == 0.
std::size_t bit_length(const Nat& v);

// log2(v) for v >= 1, accurate for any magnitude.
double log2_nat(const Nat& v);

} // namespace knaprsa
