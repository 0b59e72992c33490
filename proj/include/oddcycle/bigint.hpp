#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddcycle {

/// Exact arbitrary-precision integer used for every count and coefficient.
/// Lattice-point counts exceed 64-bit range well before s = 10, and this
/// tool treats silent overflow as a correctness bug, not a performance
/// trade-off.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k), exact.  Returns 0 when k < 0, n < 0 or
/// n < k, which is the convention every generating-function identity in
/// this library relies on.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses a decimal string (optionally signed).  Rejects anything else;
/// cache files must never be silently misread.
inline BigInt parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty decimal string");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("bare sign is not a decimal string");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("not a decimal string: " + text);
    }
    return BigInt(text);
}

}  // namespace oddcycle
