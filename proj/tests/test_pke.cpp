#include "knaprsa/pke.hpp"

#include "knaprsa/errors.hpp"
#include "knaprsa/numtheory.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace knaprsa;
using testsupport::ScriptedRng;
using testsupport::make_toy_keypair;

TEST_CASE("toy keypair encrypts m=1011 to (241, 21) under the pinned rng") {
    auto [pk, sk] = make_toy_keypair();
    const BitString m = BitString::from_string("1011");

    // Script: gen_mask picks positions {0, 2} (words 0 then 1), then
    // confuse bits 1 and 0. Mask = 1010, processed message = 001010,
    // y = 10, c1 = 10^3 mod 253 = 241, c2 = a_1 + a_3 = 21.
    ScriptedRng rng({0, 1, 1, 0});
    const Ciphertext c = encrypt(pk, m, rng);
    CHECK(c.c1 == 241);
    CHECK(c.c2 == 21);

    const DecryptResult back = decrypt(sk, c);
    REQUIRE(back.ok());
    CHECK(back.message->to_string() == "1011");
}

TEST_CASE("encrypt_with_mask pins the mask explicitly") {
    auto [pk, sk] = make_toy_keypair();
    const BitString m = BitString::from_string("1011");
    const MaskVector x = make_mask(BitString::from_string("1010"));
    ScriptedRng rng({1, 0});   // confuse bits only
    const Ciphertext c = encrypt_with_mask(pk, m, x, rng);
    CHECK(c.c1 == 241);
    CHECK(c.c2 == 21);
}

TEST_CASE("toy keypair rejects the weight-breaking maul") {
    auto [pk, sk] = make_toy_keypair();
    // c2 = 35 decodes to r = 35*17 mod 29 = 15 = 5+6+4, weight 3, and
    // 3 does not divide 4.
    const DecryptResult res = decrypt(sk, Ciphertext{Nat(241), Nat(35)});
    CHECK_FALSE(res.ok());
    CHECK(res.reason == RejectReason::weight_invalid);
    CHECK(to_string(res.reason) == "weight-invalid");
}

TEST_CASE("aliased maul decrypts to a valid but different message") {
    auto [pk, sk] = make_toy_keypair();
    // c2 = 21 + a_1 = 23 aliases to mask 0101 (weight 2, still valid);
    // the decryption is a well-formed string that differs from the
    // original plaintext.
    const DecryptResult res = decrypt(sk, Ciphertext{Nat(241), Nat(23)});
    REQUIRE(res.ok());
    CHECK(res.message->to_string() == "0011");
}

TEST_CASE("knapsack-invalid and payload-overflow reject paths") {
    auto [pk, sk] = make_toy_keypair();
    // r = 12*17 mod 29 = 1 is not a subset sum.
    const DecryptResult bad_knap = decrypt(sk, Ciphertext{Nat(241), Nat(12)});
    CHECK_FALSE(bad_knap.ok());
    CHECK(bad_knap.reason == RejectReason::knapsack_invalid);

    // c1 >= n can never carry a valid payload.
    const DecryptResult big_c1 = decrypt(sk, Ciphertext{Nat(253), Nat(21)});
    CHECK_FALSE(big_c1.ok());
    CHECK(big_c1.reason == RejectReason::payload_overflow);

    // y beyond 2^L: find c1 whose RSA preimage is 2^6 = 64 > 2^L - 1.
    const Nat c1_over = mod_pow(64, 3, 253);
    const DecryptResult over = decrypt(sk, Ciphertext{c1_over, Nat(21)});
    CHECK_FALSE(over.ok());
    CHECK(over.reason == RejectReason::payload_overflow);
}

TEST_CASE("keygen validates parameters") {
    SplitMix64Rng rng(71);
    SystemParams bad;
    bad.k = 8;
    bad.n_bits = 8;
    bad.h = 4;
    CHECK_THROWS_AS(bad.validate(), ParamError);
    CHECK_THROWS_AS(keygen(bad, rng), ParamError);

    SystemParams bad_h;
    bad_h.k = 8;
    bad_h.n_bits = 32;
    bad_h.h = 3;
    CHECK_THROWS_AS(keygen(bad_h, rng), ParamError);
}

TEST_CASE("generated keypairs satisfy cross-component invariants") {
    SplitMix64Rng rng(73);
    SystemParams params;
    params.k = 8;
    params.n_bits = 24;
    params.h = 4;
    params.safe_primes = false;
    for (int rep = 0; rep < 100; ++rep) {
        auto [pk, sk] = keygen(params, rng);
        REQUIRE(pk.k() == 8);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(pk.knapsack.a[i] ==
                  sk.knapsack.b[i] * sk.knapsack.mult % sk.knapsack.modulus);
        }
        CHECK(pk.rsa.e * sk.rsa.d % sk.rsa.phi == 1);
        CHECK(pk == sk.public_key());
        // Every processed message fits under the modulus: 2^L <= n.
        const BlockLayout layout = block_params(pk.k(), pk.h, pk.n_bits());
        const Nat payload_bound = Nat(1) << layout.total;
        CHECK(payload_bound <= pk.rsa.n);
    }
}

TEST_CASE("encrypt/decrypt round-trip across configurations") {
    struct Config {
        std::size_t k, n_bits;
        bool safe;
        int messages;
    };
    for (const Config cfg : {Config{16, 64, true, 60}, Config{64, 128, true, 40},
                             Config{256, 512, false, 6}}) {
        SplitMix64Rng rng(1000 + cfg.k);
        SystemParams params;
        params.k = cfg.k;
        params.n_bits = cfg.n_bits;
        params.h = cfg.k / 2;
        params.safe_primes = cfg.safe;
        auto [pk, sk] = keygen(params, rng);
        for (int i = 0; i < cfg.messages; ++i) {
            const BitString m = BitString::from_nat(rng.bits(cfg.k), cfg.k);
            const Ciphertext c = encrypt(pk, m, rng);
            CHECK(c.c1 < pk.rsa.n);
            const DecryptResult back = decrypt(sk, c);
            REQUIRE(back.ok());
            CHECK(*back.message == m);
        }
        // M needs ~log2(k) bits beyond the weights, so the density
        // floor of 0.9 is only reachable once k is large enough to
        // absorb that overhead.
        CHECK(density(pk.knapsack) > (cfg.k >= 64 ? 0.9 : 0.8));
    }
}

TEST_CASE("encryption is randomized") {
    SplitMix64Rng rng(79);
    SystemParams params;
    params.k = 16;
    params.n_bits = 64;
    params.h = 8;
    params.safe_primes = false;
    auto [pk, sk] = keygen(params, rng);
    const BitString m = BitString::from_nat(rng.bits(16), 16);
    SplitMix64Rng ra(83), rb(89);
    const Ciphertext ca = encrypt(pk, m, ra);
    const Ciphertext cb = encrypt(pk, m, rb);
    CHECK(ca.c1 != cb.c1);
    // Both still decrypt to m.
    CHECK(*decrypt(sk, ca).message == m);
    CHECK(*decrypt(sk, cb).message == m);
}

TEST_CASE("wrong-length messages are rejected") {
    auto [pk, sk] = make_toy_keypair();
    SplitMix64Rng rng(97);
    CHECK_THROWS_AS(encrypt(pk, BitString::from_string("10111"), rng), ParamError);
    CHECK_THROWS_AS(encrypt(pk, BitString::from_string("101"), rng), ParamError);
}

TEST_CASE("decrypt is total on garbage ciphertexts") {
    SplitMix64Rng rng(101);
    SystemParams params;
    params.k = 8;
    params.n_bits = 32;
    params.h = 4;
    params.safe_primes = false;
    auto [pk, sk] = keygen(params, rng);
    std::size_t accepted = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        // 8- and 16-byte random blobs as numbers.
        const Ciphertext c{rng.bits(64), rng.bits(rep % 2 ? 64 : 128)};
        const DecryptResult res = decrypt(sk, c);
        if (res.ok()) {
            CHECK(res.message->size() == 8);
            ++accepted;
        } else {
            CHECK(res.reason != RejectReason::none);
        }
    }
    // Garbage overwhelmingly rejects; acceptances (if any) were checked
    // to be well-formed k-bit strings above.
    CHECK(accepted < 500);
}

TEST_CASE("decoded mask always matches the encryption mask") {
    SplitMix64Rng rng(103);
    SystemParams params;
    params.k = 12;
    params.n_bits = 48;
    params.h = 6;
    params.safe_primes = false;
    auto [pk, sk] = keygen(params, rng);
    for (int rep = 0; rep < 200; ++rep) {
        const MaskVector x = gen_mask(params.k, params.h, rng);
        const BitString m = BitString::from_nat(rng.bits(params.k), params.k);
        const Ciphertext c = encrypt_with_mask(pk, m, x, rng);
        const auto decoded = knapsack_decode(sk.knapsack, c.c2);
        REQUIRE(decoded.has_value());
        CHECK(*decoded == x);
    }
}
