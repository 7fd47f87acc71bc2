#pragma once

#include <stdexcept>
#include <string>

namespace gausslab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(unsigned long long q)
        : Error("modulus is not an odd prime: " + std::to_string(q)) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(long long j, unsigned long long order)
        : Error("character index " + std::to_string(j) + " not in [0, " +
                std::to_string(order) + ")") {}
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t got, std::size_t want)
        : Error("weight vector has " + std::to_string(got) + " entries, expected " +
                std::to_string(want)) {}
};

struct PrecisionTooLow : Error {
    PrecisionTooLow(unsigned have, unsigned need)
        : Error("working precision " + std::to_string(have) + " bits below required floor " +
                std::to_string(need) + " bits") {}
};

struct TwistNotCoprime : Error {
    TwistNotCoprime(long long n, unsigned long long p)
        : Error("twist n=" + std::to_string(n) + " is divisible by p=" + std::to_string(p)) {}
};

struct PrincipalNotAllowed : Error {
    PrincipalNotAllowed() : Error("operation requires a non-principal character") {}
};

struct OddCharacter : Error {
    OddCharacter() : Error("operation requires an even character") {}
};

struct PrincipalCharacter : Error {
    PrincipalCharacter() : Error("operation is undefined for the principal character") {}
};

struct UnsupportedM : Error {
    explicit UnsupportedM(unsigned m)
        : Error("no closed-form prediction for m=" + std::to_string(m)) {}
};

struct TooLarge : Error {
    using Error::Error;
};

struct EpsUnattainable : Error {
    using Error::Error;
};

struct UnknownStatement : Error {
    explicit UnknownStatement(const std::string& id) : Error("unknown statement id: " + id) {}
};

struct RangeTooLarge : Error {
    using Error::Error;
};

struct CacheCorrupt : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace gausslab
