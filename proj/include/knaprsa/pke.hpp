#pragma once

#include "knaprsa/bitstring.hpp"
#include "knaprsa/knapsack.hpp"
#include "knaprsa/precoder.hpp"
#include "knaprsa/rng.hpp"
#include "knaprsa/rsa.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace knaprsa {

// Key generation configuration. k is the message/knapsack length,
// n_bits the RSA modulus size, h the per-keypair mask weight.
struct SystemParams {
    std::size_t k = 64;
    std::size_t n_bits = 128;
    std::size_t h = 32;
    bool safe_primes = true;

    // Throws ParamError unless k < n_bits, h | k, 0 < h < k and
    // block_params(k, h, n_bits) succeeds.
    void validate() const;
};

struct PublicKey {
    KnapsackPublic knapsack;
    RsaPublic rsa;
    std::size_t h = 0;

    std::size_t k() const { return knapsack.k; }
    std::size_t n_bits() const { return rsa.n_bits; }

    bool operator==(const PublicKey&) const = default;
};

struct PrivateKey {
    KnapsackPrivate knapsack;
    RsaPublic rsa_pub;
    RsaPrivate rsa;
    std::size_t h = 0;

    std::size_t k() const { return knapsack.k; }
    std::size_t n_bits() const { return rsa_pub.n_bits; }

    PublicKey public_key() const;
};

struct Ciphertext {
    Nat c1;
    Nat c2;

    bool operator==(const Ciphertext&) const = default;
};

enum class RejectReason {
    none,
    knapsack_invalid,    // subset-sum checksum failed
    weight_invalid,      // recovered mask weight admits no block layout
    payload_overflow,    // c1 >= n or recovered y >= 2^L
};

std::string_view to_string(RejectReason r);

// Decryption returns the plaintext or the reject symbol with a
// machine-readable reason.
struct DecryptResult {
    std::optional<BitString> message;
    RejectReason reason = RejectReason::none;

    bool ok() const { return message.has_value(); }
};

std::pair<PublicKey, PrivateKey> keygen(const SystemParams& params, Rng& rng);

// Randomized encryption of a k-bit message: sample a weight-h mask,
// precode, RSA-encrypt the processed message's value, knapsack-encode
// the mask.
Ciphertext encrypt(const PublicKey& pk, const BitString& m, Rng& rng);

// Encryption with a caller-supplied mask; the layout is derived from
// the mask's weight, so per-message weights work as long as they admit
// a layout. rng only feeds the confuse blocks.
Ciphertext encrypt_with_mask(const PublicKey& pk, const BitString& m,
                             const MaskVector& x, Rng& rng);

// Total function: any (c1, c2) pair yields a k-bit message or a reject,
// never an exception. Cheap knapsack-layer checks run before the RSA
// exponentiation.
DecryptResult decrypt(const PrivateKey& sk, const Ciphertext& c);

// --- serialization (text, LF line endings, lowercase hex) ---

std::string serialize_key(const PublicKey& key);
std::string serialize_key(const PrivateKey& key);

// Parsers validate every structural invariant (weight consistency,
// a_i = b_i*w mod M, e*d = 1 mod phi, n = p*q, ...) and throw
// ParseError naming the offending field.
PublicKey parse_public_key(std::string_view text);
PrivateKey parse_private_key(std::string_view text);

std::string serialize_ciphertext(const Ciphertext& c);
Ciphertext parse_ciphertext(std::string_view text);

// Message files: "len=<dec>" header plus value hex; lengths that are
// not a multiple of 4 round-trip because len is explicit.
std::string serialize_message(const BitString& m);
BitString parse_message(std::string_view text);

} // namespace knaprsa
