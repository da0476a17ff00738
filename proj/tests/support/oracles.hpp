// Test-side oracles and fixtures. Everything here is deliberately
// independent of the library's decode/primality/exponentiation paths:
// plain enumeration and schoolbook arithmetic only.
#pragma once

#include "knaprsa/bitstring.hpp"
#include "knaprsa/knapsack.hpp"
#include "knaprsa/nat.hpp"
#include "knaprsa/pke.hpp"
#include "knaprsa/rng.hpp"
#include "knaprsa/rsa.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace testsupport {

using knaprsa::BitString;
using knaprsa::KnapsackPrivate;
using knaprsa::KnapsackPublic;
using knaprsa::Nat;
using knaprsa::PrivateKey;
using knaprsa::PublicKey;
using knaprsa::RsaPrivate;
using knaprsa::RsaPublic;

// Replays a fixed word script; exhaustion is a test bug.
class ScriptedRng final : public knaprsa::Rng {
public:
    explicit ScriptedRng(std::vector<std::uint64_t> words) : words_(std::move(words)) {}

    std::uint64_t next_u64() override {
        if (next_ >= words_.size()) {
            throw std::logic_error("ScriptedRng: script exhausted");
        }
        return words_[next_++];
    }

    std::size_t consumed() const { return next_; }

private:
    std::vector<std::uint64_t> words_;
    std::size_t next_ = 0;
};

// Exhaustive subset-sum search: every selection (bit i of the result
// selects weights[i]) whose sum equals the target.
inline std::vector<std::uint32_t> subset_sum_solutions(std::span<const Nat> weights,
                                                       const Nat& target) {
    if (weights.size() > 20) {
        throw std::logic_error("subset_sum_solutions: too many weights");
    }
    std::vector<std::uint32_t> hits;
    const std::uint32_t end = 1u << weights.size();
    for (std::uint32_t sel = 0; sel < end; ++sel) {
        Nat sum = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (sel & (1u << i)) {
                sum += weights[i];
            }
        }
        if (sum == target) {
            hits.push_back(sel);
        }
    }
    return hits;
}

inline std::uint32_t mask_to_selection(const BitString& bits) {
    std::uint32_t sel = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits.bit(i)) {
            sel |= 1u << i;
        }
    }
    return sel;
}

// Schoolbook primality.
inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// Repeated multiplication, usable for small exponents only.
inline Nat naive_mod_pow(const Nat& base, std::uint64_t exp, const Nat& modulus) {
    Nat acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        acc = acc * base % modulus;
    }
    return acc;
}

// --- worked fixtures ---

// k=3: c=(3,1,1), b=(3,2,4), M=11, w=7.
inline std::pair<KnapsackPrivate, KnapsackPublic> make_k3() {
    KnapsackPrivate priv;
    priv.k = 3;
    priv.c = {Nat(3), Nat(1), Nat(1)};
    priv.b = {Nat(3), Nat(2), Nat(4)};
    priv.modulus = 11;
    priv.mult = 7;
    priv.mult_inv = 8;   // 7*8 = 56 = 5*11 + 1
    KnapsackPublic pub;
    pub.k = 3;
    pub.a = {Nat(10), Nat(3), Nat(6)};
    return {priv, pub};
}

// k=4: c=(5,3,1,1), b=(5,6,4,8), M=29, w=12.
inline std::pair<KnapsackPrivate, KnapsackPublic> make_k4() {
    KnapsackPrivate priv;
    priv.k = 4;
    priv.c = {Nat(5), Nat(3), Nat(1), Nat(1)};
    priv.b = {Nat(5), Nat(6), Nat(4), Nat(8)};
    priv.modulus = 29;
    priv.mult = 12;
    priv.mult_inv = 17;   // 12*17 = 204 = 7*29 + 1
    KnapsackPublic pub;
    pub.k = 4;
    pub.a = {Nat(2), Nat(14), Nat(19), Nat(9)};
    return {priv, pub};
}

// p=11, q=23, e=3: n=253, phi=220, d=147.
inline std::pair<RsaPublic, RsaPrivate> make_toy_rsa() {
    RsaPublic pub{Nat(253), Nat(3), 8};
    RsaPrivate priv{Nat(11), Nat(23), Nat(147), Nat(220)};
    return {pub, priv};
}

// Full keypair: K4 knapsack + toy RSA, k=4, n_bits=8, h=2.
inline std::pair<PublicKey, PrivateKey> make_toy_keypair() {
    auto [kpriv, kpub] = make_k4();
    auto [rpub, rpriv] = make_toy_rsa();
    PublicKey pk{kpub, rpub, 2};
    PrivateKey sk{kpriv, rpub, rpriv, 2};
    return {pk, sk};
}

} // namespace testsupport
