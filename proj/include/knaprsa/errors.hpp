#pragma once

#include <stdexcept>
#include <string>

namespace knaprsa {

// Base class for every error the library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument or configuration (maps to CLI exit 2).
struct ParamError : Error {
    explicit ParamError(const std::string& msg) : Error(msg) {}
};

// Modulus smaller than 2 where a modulus >= 2 is required.
struct InvalidModulusError : ParamError {
    explicit InvalidModulusError(const std::string& msg) : ParamError(msg) {}
};

// gcd(a, m) != 1, so no modular inverse exists.
struct NoInverseError : Error {
    explicit NoInverseError(const std::string& msg) : Error(msg) {}
};

// Value outside the operation's domain (e.g. RSA input >= n).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// k/n_bits combination leaves no room for confuse blocks (s < 1).
struct ModulusTooSmallError : ParamError {
    explicit ModulusTooSmallError(const std::string& msg) : ParamError(msg) {}
};

// Randomized search (prime or key generation) exceeded its retry bound.
struct GenerationTimeoutError : Error {
    explicit GenerationTimeoutError(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent serialized data.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace knaprsa
