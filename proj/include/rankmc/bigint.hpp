#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankmc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Largest j with base^j <= x, for x >= 1. Exact integer comparison, no logarithms.
inline int floor_log(std::uint64_t base, const BigInt& x) {
    if (base < 2 || x < 1) return -1;
    int j = 0;
    BigInt acc = base;
    while (acc <= x) {
        acc *= base;
        ++j;
    }
    return j;
}

/// (q^a - 1) / (q - 1) = 1 + q + ... + q^(a-1); zero for a <= 0.
inline BigInt gauss_sum(std::uint64_t q, int a) {
    BigInt s = 0;
    BigInt t = 1;
    for (int i = 0; i < a; ++i) {
        s += t;
        t *= q;
    }
    return s;
}

}  // namespace rankmc
