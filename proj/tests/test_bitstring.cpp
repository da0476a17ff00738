#include "knaprsa/bitstring.hpp"

#include "knaprsa/errors.hpp"
#include "knaprsa/rng.hpp"

#include <doctest.h>

using namespace knaprsa;

TEST_CASE("bit strings keep explicit length and leading zeros") {
    const BitString m = BitString::from_string("001010");
    CHECK(m.size() == 6);
    CHECK(m.to_nat() == 10);
    CHECK(m.to_string() == "001010");
    CHECK(BitString::from_nat(10, 6) == m);
    CHECK(BitString::from_nat(10, 4).to_string() == "1010");
    CHECK_THROWS_AS(BitString::from_nat(10, 3), DomainError);
    CHECK(BitString::from_nat(0, 3).to_string() == "000");
    CHECK(BitString(0).to_nat() == 0);
}

TEST_CASE("value round-trip at awkward lengths") {
    SplitMix64Rng rng(5);
    for (std::size_t len : {1u, 7u, 8u, 9u, 63u, 64u, 65u, 200u}) {
        for (int rep = 0; rep < 20; ++rep) {
            const Nat v = rng.bits(len);
            const BitString s = BitString::from_nat(v, len);
            CHECK(s.size() == len);
            CHECK(s.to_nat() == v);
        }
    }
}

TEST_CASE("xor, slices, flips") {
    const BitString a = BitString::from_string("1011");
    const BitString x = BitString::from_string("1010");
    CHECK((a ^ x).to_string() == "0001");
    CHECK(((a ^ x) ^ x) == a);
    CHECK(a.slice(1, 2).to_string() == "01");
    CHECK(a.with_flipped(0).to_string() == "0011");
    CHECK(a.hamming_distance(x) == 1);
    CHECK_THROWS_AS(a ^ BitString::from_string("10"), ParamError);
    CHECK_THROWS_AS(a.slice(3, 2), ParamError);
    CHECK_THROWS_AS(BitString::from_string("10a1"), ParamError);
}
