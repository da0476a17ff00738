#include "knaprsa/nat.hpp"

#include "knaprsa/errors.hpp"

#include <cmath>

namespace knaprsa {

std::string to_hex(const Nat& v) {
    if (v == 0) {
        return "0";
    }
    // mpz_get_str emits lowercase for base 16 with no leading zeros.
    char* raw = mpz_get_str(nullptr, 16, v.get_mpz_t());
    std::string out(raw);
    void (*freefunc)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, out.size() + 1);
    return out;
}

Nat nat_from_hex(std::string_view hex) {
    if (hex.empty()) {
        throw ParseError("empty hex value");
    }
    for (char ch : hex) {
        bool ok = (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f');
        if (!ok) {
            throw ParseError("invalid hex character '" + std::string(1, ch) + "'");
        }
    }
    if (hex.size() > 1 && hex.front() == '0') {
        throw ParseError("hex value has leading zeros");
    }
    Nat v;
    if (mpz_set_str(v.get_mpz_t(), std::string(hex).c_str(), 16) != 0) {
        throw ParseError("unparseable hex value");
    }
    return v;
}

std::size_t bit_length(const Nat& v) {
    if (v == 0) {
        return 0;
    }
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

double log2_nat(const Nat& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

} // namespace knaprsa
