#include "knaprsa/errors.hpp"
#include "knaprsa/numtheory.hpp"
#include "knaprsa/pke.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace knaprsa {

namespace {

constexpr std::string_view kPublicHeader = "KNAPRSA PUBLIC KEY v1";
constexpr std::string_view kPrivateHeader = "KNAPRSA PRIVATE KEY v1";

std::string join_hex(const std::vector<Nat>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += to_hex(values[i]);
    }
    return out;
}

// Strict line cursor over an LF-terminated text block.
class LineReader {
public:
    explicit LineReader(std::string_view text) : rest_(text) {
        if (text.find('\r') != std::string_view::npos) {
            throw ParseError("carriage returns are not allowed (LF endings only)");
        }
    }

    std::string_view next(std::string_view what) {
        if (rest_.empty()) {
            throw ParseError("missing line: " + std::string(what));
        }
        const std::size_t nl = rest_.find('\n');
        if (nl == std::string_view::npos) {
            throw ParseError("unterminated line: " + std::string(what));
        }
        std::string_view line = rest_.substr(0, nl);
        rest_.remove_prefix(nl + 1);
        return line;
    }

    void expect_end() const {
        if (!rest_.empty()) {
            throw ParseError("trailing data after final field");
        }
    }

private:
    std::string_view rest_;
};

std::string_view expect_field(LineReader& reader, std::string_view key) {
    std::string_view line = reader.next(key);
    const std::string prefix = std::string(key) + "=";
    if (line.substr(0, prefix.size()) != prefix) {
        throw ParseError("expected field '" + std::string(key) + "'");
    }
    return line.substr(prefix.size());
}

std::size_t parse_dec(std::string_view text, std::string_view field) {
    if (text.empty() || text.size() > 9) {
        throw ParseError("field " + std::string(field) + ": bad decimal value");
    }
    if (text.size() > 1 && text.front() == '0') {
        throw ParseError("field " + std::string(field) + ": leading zeros");
    }
    std::size_t v = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw ParseError("field " + std::string(field) + ": bad decimal value");
        }
        v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    return v;
}

Nat parse_hex_field(std::string_view text, std::string_view field) {
    try {
        return nat_from_hex(text);
    } catch (const ParseError& err) {
        throw ParseError("field " + std::string(field) + ": " + err.what());
    }
}

std::vector<Nat> parse_hex_list(std::string_view text, std::size_t expect_count,
                                std::string_view field) {
    std::vector<Nat> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view item = comma == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, comma - start);
        out.push_back(parse_hex_field(item, field));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (out.size() != expect_count) {
        throw ParseError("field " + std::string(field) + ": expected " +
                         std::to_string(expect_count) + " entries");
    }
    return out;
}

struct PublicFields {
    std::size_t k = 0;
    std::size_t n_bits = 0;
    std::size_t h = 0;
    Nat e;
    Nat n;
    std::vector<Nat> a;
};

void write_public_fields(std::ostringstream& out, const KnapsackPublic& knap,
                         const RsaPublic& rsa, std::size_t h) {
    out << "k=" << knap.k << "\n";
    out << "nbits=" << rsa.n_bits << "\n";
    out << "h=" << h << "\n";
    out << "e=" << to_hex(rsa.e) << "\n";
    out << "n=" << to_hex(rsa.n) << "\n";
    out << "a=" << join_hex(knap.a) << "\n";
}

PublicFields read_public_fields(LineReader& reader) {
    PublicFields f;
    f.k = parse_dec(expect_field(reader, "k"), "k");
    f.n_bits = parse_dec(expect_field(reader, "nbits"), "nbits");
    f.h = parse_dec(expect_field(reader, "h"), "h");
    f.e = parse_hex_field(expect_field(reader, "e"), "e");
    f.n = parse_hex_field(expect_field(reader, "n"), "n");
    f.a = parse_hex_list(expect_field(reader, "a"), f.k == 0 ? 1 : f.k, "a");
    return f;
}

// Shared structural checks for both key flavors.
void validate_public_fields(const PublicFields& f) {
    if (f.k < 3) {
        throw ParseError("field k: must be >= 3");
    }
    if (f.k >= f.n_bits) {
        throw ParseError("field nbits: must exceed k");
    }
    if (f.h == 0 || f.h >= f.k || f.k % f.h != 0) {
        throw ParseError("field h: must divide k with 0 < h < k");
    }
    try {
        block_params(f.k, f.h, f.n_bits);
    } catch (const ParamError& err) {
        throw ParseError(std::string("field nbits: ") + err.what());
    }
    if (f.e < 2) {
        throw ParseError("field e: must be > 1");
    }
    if (bit_length(f.n) != f.n_bits) {
        throw ParseError("field n: bit length != nbits");
    }
}

} // namespace

std::string serialize_key(const PublicKey& key) {
    std::ostringstream out;
    out << kPublicHeader << "\n";
    write_public_fields(out, key.knapsack, key.rsa, key.h);
    return out.str();
}

std::string serialize_key(const PrivateKey& key) {
    std::ostringstream out;
    out << kPrivateHeader << "\n";
    write_public_fields(out, key.public_key().knapsack, key.rsa_pub, key.h);
    out << "b=" << join_hex(key.knapsack.b) << "\n";
    out << "w=" << to_hex(key.knapsack.mult) << "\n";
    out << "bigm=" << to_hex(key.knapsack.modulus) << "\n";
    out << "d=" << to_hex(key.rsa.d) << "\n";
    out << "p=" << to_hex(key.rsa.p) << "\n";
    out << "q=" << to_hex(key.rsa.q) << "\n";
    return out.str();
}

PublicKey parse_public_key(std::string_view text) {
    LineReader reader(text);
    if (reader.next("header") != kPublicHeader) {
        throw ParseError("bad public key header");
    }
    PublicFields f = read_public_fields(reader);
    reader.expect_end();
    validate_public_fields(f);

    PublicKey key;
    key.knapsack.k = f.k;
    key.knapsack.a = std::move(f.a);
    key.rsa = RsaPublic{std::move(f.n), std::move(f.e), f.n_bits};
    key.h = f.h;
    return key;
}

PrivateKey parse_private_key(std::string_view text) {
    LineReader reader(text);
    if (reader.next("header") != kPrivateHeader) {
        throw ParseError("bad private key header");
    }
    PublicFields f = read_public_fields(reader);
    std::vector<Nat> b = parse_hex_list(expect_field(reader, "b"), f.k == 0 ? 1 : f.k, "b");
    Nat w = parse_hex_field(expect_field(reader, "w"), "w");
    Nat big_m = parse_hex_field(expect_field(reader, "bigm"), "bigm");
    Nat d = parse_hex_field(expect_field(reader, "d"), "d");
    Nat p = parse_hex_field(expect_field(reader, "p"), "p");
    Nat q = parse_hex_field(expect_field(reader, "q"), "q");
    reader.expect_end();
    validate_public_fields(f);

    // Knapsack trapdoor invariants.
    Nat sum_b = 0;
    std::vector<Nat> c;
    c.reserve(f.k);
    for (std::size_t i = 0; i < f.k; ++i) {
        const std::string name = "b_" + std::to_string(i + 1);
        // b_i = 2^(i-1) * c_i with c_i odd of the prescribed length.
        if (mpz_scan1(b[i].get_mpz_t(), 0) != i) {
            throw ParseError("field b: " + name + " has wrong 2-adic valuation");
        }
        Nat ci = b[i] >> i;
        const std::size_t want_bits = f.k - 1 - i;
        if (i + 1 == f.k) {
            if (ci != 1) {
                throw ParseError("field b: c_k must be 1");
            }
        } else if (bit_length(ci) != want_bits) {
            throw ParseError("field b: " + name + " seed has wrong bit length");
        }
        sum_b += b[i];
        c.push_back(std::move(ci));
    }
    if (big_m <= sum_b) {
        throw ParseError("field bigm: modulus must exceed sum of weights");
    }
    if (w == 0 || w >= big_m) {
        throw ParseError("field w: must satisfy 0 < w < bigm");
    }
    if (gcd(w, big_m) != 1) {
        throw ParseError("field w: not coprime to bigm");
    }
    for (std::size_t i = 0; i < f.k; ++i) {
        if (f.a[i] != b[i] * w % big_m) {
            throw ParseError("field a: a_" + std::to_string(i + 1) + " != b_i*w mod bigm");
        }
    }

    // RSA invariants.
    if (p == q) {
        throw ParseError("field q: p and q must be distinct");
    }
    if (!is_probable_prime(p, kPrimeTestRounds)) {
        throw ParseError("field p: not prime");
    }
    if (!is_probable_prime(q, kPrimeTestRounds)) {
        throw ParseError("field q: not prime");
    }
    if (f.n != p * q) {
        throw ParseError("field n: n != p*q");
    }
    Nat phi = (p - 1) * (q - 1);
    if (f.e >= phi) {
        throw ParseError("field e: must be < phi(n)");
    }
    if (d <= 1 || d >= phi) {
        throw ParseError("field d: must satisfy 1 < d < phi(n)");
    }
    if (f.e * d % phi != 1) {
        throw ParseError("field d: e*d != 1 mod phi(n)");
    }

    PrivateKey key;
    key.knapsack.k = f.k;
    key.knapsack.c = std::move(c);
    key.knapsack.b = std::move(b);
    key.knapsack.modulus = big_m;
    key.knapsack.mult = w;
    key.knapsack.mult_inv = mod_inverse(w, big_m);
    key.rsa_pub = RsaPublic{std::move(f.n), std::move(f.e), f.n_bits};
    key.rsa = RsaPrivate{std::move(p), std::move(q), std::move(d), std::move(phi)};
    key.h = f.h;

    // The serialized a-list must be exactly what the trapdoor produces.
    // (Checked element-wise above; nothing else to reconcile.)
    return key;
}

std::string serialize_ciphertext(const Ciphertext& c) {
    return "c1=" + to_hex(c.c1) + "\nc2=" + to_hex(c.c2) + "\n";
}

Ciphertext parse_ciphertext(std::string_view text) {
    LineReader reader(text);
    Ciphertext c;
    c.c1 = parse_hex_field(expect_field(reader, "c1"), "c1");
    c.c2 = parse_hex_field(expect_field(reader, "c2"), "c2");
    reader.expect_end();
    return c;
}

std::string serialize_message(const BitString& m) {
    return "len=" + std::to_string(m.size()) + "\nbits=" + to_hex(m.to_nat()) + "\n";
}

BitString parse_message(std::string_view text) {
    LineReader reader(text);
    const std::size_t len = parse_dec(expect_field(reader, "len"), "len");
    Nat value = parse_hex_field(expect_field(reader, "bits"), "bits");
    reader.expect_end();
    if (len == 0) {
        throw ParseError("field len: must be >= 1");
    }
    if (bit_length(value) > len) {
        throw ParseError("field bits: value does not fit in len bits");
    }
    return BitString::from_nat(value, len);
}

} // namespace knaprsa
