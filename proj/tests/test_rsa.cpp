#include "knaprsa/rsa.hpp"

#include "knaprsa/errors.hpp"
#include "knaprsa/numtheory.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace knaprsa;
using testsupport::make_toy_rsa;
using testsupport::naive_mod_pow;
using testsupport::trial_division_prime;

TEST_CASE("toy keypair p=11 q=23 e=3") {
    auto [pub, priv] = make_toy_rsa();
    CHECK(pub.n == 253);
    CHECK(priv.phi == 220);
    CHECK(Nat(3) * 147 % 220 == 1);   // d = 147
    // 11 and 23 are safe primes: 5 and 11 are prime.
    CHECK(trial_division_prime(5));
    CHECK(trial_division_prime(11));

    CHECK(rsa_encrypt(pub, 5) == 125);
    CHECK(rsa_encrypt(pub, 5) == naive_mod_pow(5, 3, 253));
    CHECK(rsa_encrypt(pub, 1) == 1);
    CHECK(rsa_encrypt(pub, 10) == 241);
    CHECK(rsa_decrypt(pub, priv, 125) == 5);
    CHECK(rsa_decrypt(pub, priv, 1) == 1);
    CHECK(rsa_decrypt(pub, priv, 241) == 10);

    CHECK_THROWS_AS(rsa_encrypt(pub, 253), DomainError);
    CHECK_THROWS_AS(rsa_decrypt(pub, priv, 300), DomainError);
}

TEST_CASE("generated keypairs are consistent") {
    SplitMix64Rng rng(23);
    for (std::size_t n_bits : {8u, 16u, 33u, 64u}) {
        auto [pub, priv] = gen_rsa(n_bits, std::nullopt, false, rng);
        CHECK(bit_length(pub.n) == n_bits);
        CHECK(pub.n == priv.p * priv.q);
        CHECK(priv.p != priv.q);
        CHECK(is_probable_prime(priv.p, 64));
        CHECK(is_probable_prime(priv.q, 64));
        CHECK(priv.phi == (priv.p - 1) * (priv.q - 1));
        CHECK(pub.e * priv.d % priv.phi == 1);
        CHECK(priv.d > 1);
        CHECK(priv.d < priv.phi);
    }
}

TEST_CASE("safe-prime mode") {
    SplitMix64Rng rng(29);
    auto [pub, priv] = gen_rsa(24, std::nullopt, true, rng);
    CHECK(is_probable_prime((priv.p - 1) / 2, 64));
    CHECK(is_probable_prime((priv.q - 1) / 2, 64));
    CHECK(bit_length(pub.n) == 24);

    // 11 is the only 4-bit safe prime, so distinct p and q can never
    // be found; the retry bound must surface instead of spinning.
    CHECK_THROWS_AS(gen_rsa(8, std::nullopt, true, rng), GenerationTimeoutError);
}

TEST_CASE("encrypt/decrypt round-trip on random keys") {
    SplitMix64Rng rng(31);
    for (std::size_t n_bits : {64u, 512u}) {
        auto [pub, priv] = gen_rsa(n_bits, std::nullopt, false, rng);
        for (int i = 0; i < 1000; ++i) {
            const Nat y = rng.below(pub.n);
            CHECK(rsa_decrypt(pub, priv, rsa_encrypt(pub, y)) == y);
        }
    }
}

TEST_CASE("fixed public exponent") {
    SplitMix64Rng rng(37);
    auto [pub, priv] = gen_rsa(32, Nat(65537), false, rng);
    CHECK(pub.e == 65537);
    CHECK(pub.e * priv.d % priv.phi == 1);

    // n_bits = 8 forces {p, q} = {11, 13}, phi = 120; gcd(9, 120) = 3
    // for every attempt, so the retry bound must trip.
    CHECK_THROWS_AS(gen_rsa(8, Nat(9), false, rng), GenerationTimeoutError);

    CHECK_THROWS_AS(gen_rsa(32, Nat(4), false, rng), ParamError);
    CHECK_THROWS_AS(gen_rsa(32, Nat(1), false, rng), ParamError);
    CHECK_THROWS_AS(gen_rsa(7, std::nullopt, false, rng), ParamError);
}
