#pragma once

#include "knaprsa/bitstring.hpp"
#include "knaprsa/nat.hpp"
#include "knaprsa/rng.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace knaprsa {

// Trapdoor side of the disguised 2-adic knapsack: odd seeds c_i with
// c_k = 1, weights b_i = 2^(i-1) * c_i, modulus M > sum(b), multiplier
// w coprime to M and its inverse.
struct KnapsackPrivate {
    std::size_t k = 0;
    std::vector<Nat> c;
    std::vector<Nat> b;
    Nat modulus;    // M
    Nat mult;       // w
    Nat mult_inv;   // w^-1 mod M
};

// Published weights a_i = b_i * w mod M.
struct KnapsackPublic {
    std::size_t k = 0;
    std::vector<Nat> a;

    bool operator==(const KnapsackPublic&) const = default;
};

// k-bit selector string with cached Hamming weight.
struct MaskVector {
    BitString bits;
    std::size_t weight = 0;

    bool operator==(const MaskVector&) const = default;
};

MaskVector make_mask(BitString bits);

// Fresh keypair for dimension k >= 3. c_i is uniform over odd integers
// with exactly (k-i) bits, M uniform in (sum b, 2 sum b], w uniform in
// [2, M-1] rejecting non-coprime draws.
std::pair<KnapsackPrivate, KnapsackPublic> gen_knapsack(std::size_t k, Rng& rng);

// Subset sum of the published weights selected by X (length must be k).
Nat knapsack_encode(const KnapsackPublic& pub, const MaskVector& x);

// Undisguise r = c2 * w^-1 mod M, peel bits from the 2-adic structure,
// then verify sum(x_i * b_i) == r. Verification failure returns nullopt
// (an illegitimate knapsack ciphertext). A passing decode is the unique
// subset-sum solution for r, which need not be the encoder's mask when
// c2 was tampered with.
std::optional<MaskVector> knapsack_decode(const KnapsackPrivate& priv, const Nat& c2);

// True iff every element exceeds the sum of all previous ones.
bool is_superincreasing(std::span<const Nat> seq);

// k / log2(max a_i). Requires k >= 2 and max a_i >= 2.
double density(const KnapsackPublic& pub);

} // namespace knaprsa
