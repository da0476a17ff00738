#include "knaprsa/pke.hpp"

#include "knaprsa/errors.hpp"

namespace knaprsa {

void SystemParams::validate() const {
    if (k < 3) {
        throw ParamError("params: k must be >= 3");
    }
    if (k >= n_bits) {
        throw ParamError("params: k must be smaller than n_bits");
    }
    block_params(k, h, n_bits);   // throws on bad h or missing confuse room
}

std::string_view to_string(RejectReason r) {
    switch (r) {
        case RejectReason::none: return "none";
        case RejectReason::knapsack_invalid: return "knapsack-invalid";
        case RejectReason::weight_invalid: return "weight-invalid";
        case RejectReason::payload_overflow: return "payload-overflow";
    }
    return "unknown";
}

PublicKey PrivateKey::public_key() const {
    PublicKey pk;
    pk.knapsack.k = knapsack.k;
    pk.knapsack.a.reserve(knapsack.k);
    for (const Nat& bi : knapsack.b) {
        pk.knapsack.a.push_back(Nat(bi * knapsack.mult % knapsack.modulus));
    }
    pk.rsa = rsa_pub;
    pk.h = h;
    return pk;
}

std::pair<PublicKey, PrivateKey> keygen(const SystemParams& params, Rng& rng) {
    params.validate();
    auto [kpriv, kpub] = gen_knapsack(params.k, rng);
    auto [rpub, rpriv] = gen_rsa(params.n_bits, std::nullopt, params.safe_primes, rng);

    PublicKey pk{std::move(kpub), rpub, params.h};
    PrivateKey sk{std::move(kpriv), std::move(rpub), std::move(rpriv), params.h};
    return {std::move(pk), std::move(sk)};
}

Ciphertext encrypt_with_mask(const PublicKey& pk, const BitString& m,
                             const MaskVector& x, Rng& rng) {
    if (m.size() != pk.k()) {
        throw ParamError("encrypt: message length != k");
    }
    if (x.bits.size() != pk.k()) {
        throw ParamError("encrypt: mask length != k");
    }
    const BlockLayout layout = block_params(pk.k(), x.weight, pk.n_bits());
    const BitString processed = encode_message(m, x, layout, rng);
    const Nat y = processed.to_nat();   // < 2^L <= 2^(n_bits - 1) <= n
    Ciphertext c;
    c.c1 = rsa_encrypt(pk.rsa, y);
    c.c2 = knapsack_encode(pk.knapsack, x);
    return c;
}

Ciphertext encrypt(const PublicKey& pk, const BitString& m, Rng& rng) {
    const MaskVector x = gen_mask(pk.k(), pk.h, rng);
    return encrypt_with_mask(pk, m, x, rng);
}

DecryptResult decrypt(const PrivateKey& sk, const Ciphertext& c) {
    const std::size_t k = sk.k();

    // Knapsack layer first: both checks are cheap compared to the RSA
    // exponentiation and reject most tampered ciphertexts outright.
    std::optional<MaskVector> x = knapsack_decode(sk.knapsack, c.c2);
    if (!x) {
        return {std::nullopt, RejectReason::knapsack_invalid};
    }
    const std::size_t h = x->weight;
    if (h == 0 || h >= k || k % h != 0) {
        return {std::nullopt, RejectReason::weight_invalid};
    }
    BlockLayout layout;
    try {
        layout = block_params(k, h, sk.n_bits());
    } catch (const ParamError&) {
        return {std::nullopt, RejectReason::weight_invalid};
    }

    if (c.c1 >= sk.rsa_pub.n) {
        return {std::nullopt, RejectReason::payload_overflow};
    }
    const Nat y = rsa_decrypt(sk.rsa_pub, sk.rsa, c.c1);
    if (bit_length(y) > layout.total) {
        return {std::nullopt, RejectReason::payload_overflow};
    }
    // y is treated as a fixed-length L-bit string; leading zeros are
    // restored here so the slot walk is deterministic.
    const BitString processed = BitString::from_nat(y, layout.total);
    return {decode_message(processed, *x, layout), RejectReason::none};
}

} // namespace knaprsa
