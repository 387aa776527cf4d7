#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hatg {

// Arbitrary-precision integer used wherever quantities outgrow 64 bits
// (tower exponents, certificate values, rational cross-multiplication).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt int_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt bigint_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(s);
}

} // namespace hatg
