#include "knaprsa/knapsack.hpp"

#include "knaprsa/errors.hpp"
#include "knaprsa/numtheory.hpp"

#include <algorithm>

namespace knaprsa {

namespace {

// Uniform odd integer with exactly `bits` bits.
Nat random_odd_with_bits(std::size_t bits, Rng& rng) {
    if (bits == 1) {
        return Nat(1);
    }
    Nat v = bits >= 3 ? rng.bits(bits - 2) : Nat(0);
    v <<= 1;
    v |= 1;
    mpz_setbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 1));
    return v;
}

} // namespace

MaskVector make_mask(BitString bits) {
    MaskVector m;
    m.weight = bits.popcount();
    m.bits = std::move(bits);
    return m;
}

std::pair<KnapsackPrivate, KnapsackPublic> gen_knapsack(std::size_t k, Rng& rng) {
    if (k < 3) {
        throw ParamError("gen_knapsack: k must be >= 3");
    }
    KnapsackPrivate priv;
    priv.k = k;
    priv.c.reserve(k);
    priv.b.reserve(k);
    Nat sum_b = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        // c_k = 1; c_i has exactly (k - i) bits for i < k.
        Nat ci = (i == k) ? Nat(1) : random_odd_with_bits(k - i, rng);
        Nat bi = ci << (i - 1);
        sum_b += bi;
        priv.c.push_back(std::move(ci));
        priv.b.push_back(std::move(bi));
    }
    // M uniform in (sum_b, 2*sum_b]; small M keeps the density high.
    priv.modulus = sum_b + 1 + rng.below(sum_b);
    for (;;) {
        priv.mult = 2 + rng.below(priv.modulus - 2);
        if (gcd(priv.mult, priv.modulus) == 1) {
            break;
        }
    }
    priv.mult_inv = mod_inverse(priv.mult, priv.modulus);

    KnapsackPublic pub;
    pub.k = k;
    pub.a.reserve(k);
    for (const Nat& bi : priv.b) {
        pub.a.push_back(Nat(bi * priv.mult % priv.modulus));
    }
    return {std::move(priv), std::move(pub)};
}

Nat knapsack_encode(const KnapsackPublic& pub, const MaskVector& x) {
    if (x.bits.size() != pub.k) {
        throw ParamError("knapsack_encode: mask length != k");
    }
    Nat sum = 0;
    for (std::size_t i = 0; i < pub.k; ++i) {
        if (x.bits.bit(i)) {
            sum += pub.a[i];
        }
    }
    return sum;
}

std::optional<MaskVector> knapsack_decode(const KnapsackPrivate& priv, const Nat& c2) {
    const Nat r = c2 * priv.mult_inv % priv.modulus;
    BitString bits(priv.k);
    Nat chosen = 0;   // sum of b_j over recovered 1-positions
    for (std::size_t i = 0; i < priv.k; ++i) {
        // x_{i+1} = floor((r - chosen) / 2^i) mod 2, saturating at 0
        // when the subtrahend exceeds r; only a true subset sum keeps
        // the difference exactly divisible.
        Nat diff = chosen > r ? Nat(0) : Nat(r - chosen);
        if (mpz_tstbit(diff.get_mpz_t(), i)) {
            bits.set_bit(i, 1);
            chosen += priv.b[i];
        }
    }
    if (chosen != r) {
        return std::nullopt;
    }
    return make_mask(std::move(bits));
}

bool is_superincreasing(std::span<const Nat> seq) {
    if (seq.empty()) {
        throw ParamError("is_superincreasing: empty sequence");
    }
    Nat sum = seq[0];
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] <= sum) {
            return false;
        }
        sum += seq[i];
    }
    return true;
}

double density(const KnapsackPublic& pub) {
    if (pub.k < 2) {
        throw ParamError("density: k must be >= 2");
    }
    const Nat& max_a = *std::max_element(pub.a.begin(), pub.a.end());
    if (max_a < 2) {
        throw ParamError("density: max weight must be >= 2");
    }
    return static_cast<double>(pub.k) / log2_nat(max_a);
}

} // namespace knaprsa
