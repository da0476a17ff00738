#include "knaprsa/numtheory.hpp"

#include "knaprsa/errors.hpp"

#include <array>
#include <cstdint>

namespace knaprsa {

namespace {

// Below this, primality is settled by trial division.
constexpr unsigned long kTrialDivisionLimit = 1u << 16;

constexpr std::array<unsigned, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool trial_division_is_prime(unsigned long n) {
    if (n < 2) {
        return false;
    }
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// One Miller-Rabin round with the given base; n odd, n > 3.
bool miller_rabin_round(const Nat& n, const Nat& base, const Nat& n_minus_1,
                        const Nat& odd_part, std::size_t two_exp) {
    Nat x = mod_pow(base, odd_part, n);
    if (x == 1 || x == n_minus_1) {
        return true;
    }
    for (std::size_t i = 1; i < two_exp; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) {
            return true;
        }
    }
    return false;
}

} // namespace

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus) {
    if (modulus < 2) {
        throw InvalidModulusError("mod_pow: modulus must be >= 2");
    }
    Nat result = 1;
    Nat acc = base % modulus;
    const std::size_t nbits = bit_length(exp);
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(exp.get_mpz_t(), i)) {
            result = (result * acc) % modulus;
        }
        if (i + 1 < nbits) {
            acc = (acc * acc) % modulus;
        }
    }
    return result;
}

Nat mod_inverse(const Nat& a, const Nat& m) {
    if (m < 2) {
        throw InvalidModulusError("mod_inverse: modulus must be >= 2");
    }
    // Extended Euclid, tracking only the coefficient of a.
    Nat r0 = m, r1 = a % m;
    Nat t0 = 0, t1 = 1;
    while (r1 != 0) {
        Nat q = r0 / r1;
        Nat r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Nat t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw NoInverseError("mod_inverse: gcd(a, m) != 1");
    }
    if (t0 < 0) {
        t0 += m;
    }
    return t0;
}

bool is_probable_prime(const Nat& n, int rounds) {
    if (rounds < 1) {
        throw ParamError("is_probable_prime: rounds must be >= 1");
    }
    if (n < kTrialDivisionLimit) {
        return trial_division_is_prime(n.get_ui());
    }
    for (unsigned p : kSmallPrimes) {
        if (n % p == 0) {
            return false;   // n >= limit, so p is a proper divisor
        }
    }
    // Write n - 1 = odd_part * 2^two_exp.
    Nat n_minus_1 = n - 1;
    Nat odd_part = n_minus_1;
    std::size_t two_exp = 0;
    while (mpz_even_p(odd_part.get_mpz_t())) {
        odd_part >>= 1;
        ++two_exp;
    }
    // Bases come from a stream seeded by n: deterministic per input,
    // uniform over [2, n-2].
    SplitMix64Rng base_rng(mpz_get_ui(n.get_mpz_t()) * 0x9e3779b97f4a7c15ULL ^
                           static_cast<std::uint64_t>(bit_length(n)));
    const Nat span = n - 3;
    for (int i = 0; i < rounds; ++i) {
        Nat base = 2 + base_rng.below(span);
        if (!miller_rabin_round(n, base, n_minus_1, odd_part, two_exp)) {
            return false;
        }
    }
    return true;
}

Nat gen_prime(std::size_t bits, bool safe, Rng& rng) {
    if (bits < 3 || (safe && bits < 4)) {
        throw ParamError("gen_prime: bit size too small");
    }
    // Expected attempts scale with ln(2^bits) (squared for safe
    // primes); the bound leaves two orders of magnitude of slack.
    const std::size_t max_attempts = safe ? 4000 * bits * bits : 4000 * bits;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        // Exactly `bits` bits: top and bottom bit forced to 1.
        Nat cand = rng.bits(bits - 2);
        cand <<= 1;
        cand |= 1;
        mpz_setbit(cand.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 1));
        if (safe) {
            // Filter on the cheap half first.
            Nat half = cand >> 1;
            if (!is_probable_prime(half, kPrimeTestRounds)) {
                continue;
            }
        }
        if (is_probable_prime(cand, kPrimeTestRounds)) {
            return cand;
        }
    }
    throw GenerationTimeoutError("gen_prime: exceeded retry bound");
}

} // namespace knaprsa
