#include "knaprsa/rsa.hpp"

#include "knaprsa/errors.hpp"
#include "knaprsa/numtheory.hpp"

namespace knaprsa {

std::pair<RsaPublic, RsaPrivate> gen_rsa(std::size_t n_bits, std::optional<Nat> e,
                                         bool safe, Rng& rng) {
    if (n_bits < 8) {
        throw ParamError("gen_rsa: n_bits must be >= 8");
    }
    if (e && (*e < 3 || mpz_even_p(e->get_mpz_t()))) {
        throw ParamError("gen_rsa: fixed e must be odd and >= 3");
    }
    const std::size_t p_bits = n_bits - n_bits / 2;
    const std::size_t q_bits = n_bits / 2;

    constexpr int kMaxKeyAttempts = 256;
    for (int attempt = 0; attempt < kMaxKeyAttempts; ++attempt) {
        Nat p = gen_prime(p_bits, safe, rng);
        Nat q = gen_prime(q_bits, safe, rng);
        if (p == q) {
            continue;
        }
        Nat n = p * q;
        if (bit_length(n) != n_bits) {
            continue;   // product fell one bit short
        }
        Nat phi = (p - 1) * (q - 1);
        Nat pub_e;
        if (e) {
            if (gcd(*e, phi) != 1) {
                continue;   // retry with new primes
            }
            pub_e = *e;
        } else {
            pub_e = 3;
            while (gcd(pub_e, phi) != 1) {
                pub_e += 2;
            }
        }
        if (pub_e >= phi) {
            continue;
        }
        Nat d = mod_inverse(pub_e, phi);
        RsaPublic pub{std::move(n), std::move(pub_e), n_bits};
        RsaPrivate priv{std::move(p), std::move(q), std::move(d), std::move(phi)};
        return {std::move(pub), std::move(priv)};
    }
    throw GenerationTimeoutError("gen_rsa: exceeded retry bound");
}

Nat rsa_encrypt(const RsaPublic& pub, const Nat& y) {
    if (y >= pub.n) {
        throw DomainError("rsa_encrypt: input >= modulus");
    }
    return mod_pow(y, pub.e, pub.n);
}

Nat rsa_decrypt(const RsaPublic& pub, const RsaPrivate& priv, const Nat& c1) {
    if (c1 >= pub.n) {
        throw DomainError("rsa_decrypt: input >= modulus");
    }
    return mod_pow(c1, priv.d, pub.n);
}

} // namespace knaprsa
