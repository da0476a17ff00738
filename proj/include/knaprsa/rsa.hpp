#pragma once

#include "knaprsa/nat.hpp"
#include "knaprsa/rng.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace knaprsa {

struct RsaPublic {
    Nat n;
    Nat e;
    std::size_t n_bits = 0;   // exact bit length of n

    bool operator==(const RsaPublic&) const = default;
};

struct RsaPrivate {
    Nat p;
    Nat q;
    Nat d;
    Nat phi;   // (p-1)(q-1)

    bool operator==(const RsaPrivate&) const = default;
};

// Keypair with n of exactly n_bits bits (n_bits >= 8). Primes get
// n_bits/2 bits each (the first one takes the extra bit when n_bits is
// odd) and are safe primes when safe is set. With e unset the smallest
// odd e >= 3 coprime to phi(n) is chosen; a fixed e must be odd and
// >= 3, and prime search retries a bounded number of times to find
// phi(n) coprime to it.
std::pair<RsaPublic, RsaPrivate> gen_rsa(std::size_t n_bits, std::optional<Nat> e,
                                         bool safe, Rng& rng);

// y^e mod n for y < n.
Nat rsa_encrypt(const RsaPublic& pub, const Nat& y);

// c1^d mod n for c1 < n; inverts rsa_encrypt.
Nat rsa_decrypt(const RsaPublic& pub, const RsaPrivate& priv, const Nat& c1);

} // namespace knaprsa
