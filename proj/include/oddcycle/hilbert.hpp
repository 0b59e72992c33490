#pragma once

#include "oddcycle/bigint.hpp"
#include "oddcycle/counting.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace oddcycle {

/// Numerator coefficients of the Hilbert series with denominator
/// (1 - lambda)^d: entries (h_0, ..., h_t) with h_t nonzero, plus the
/// denominator exponent d that was used.  For K[C_{2s+1}], d = 2s+2
/// always; it is never inferred from data.
struct HVector {
    std::vector<BigInt> entries;
    int d = 0;

    int degree() const { return static_cast<int>(entries.size()) - 1; }
};

/// Extracts the h-vector from an Ehrhart table via
///   h_i = sum_{j=0}^{min(i,d)} (-1)^j C(d, j) H(i - j),   d = 2s+2.
/// The transform is evaluated all the way to the table limit, beyond the
/// expected degree 2s-1, so the required trailing zeros at i = 2s and
/// 2s+1 double as a self-test of the counting engine: a negative
/// coefficient or a nonzero tail is reported as a hard error, never
/// returned.
inline HVector h_vector(const EhrhartTable& table) {
    const int s = table.s;
    const int d = 2 * s + 2;
    const long long limit = static_cast<long long>(table.closed.size()) - 1;
    if (limit < 2 * s + 1)
        throw std::invalid_argument("h-vector extraction needs counts up to n = 2s+1");

    std::vector<BigInt> coeffs(limit + 1);
    for (long long i = 0; i <= limit; ++i) {
        BigInt h = 0;
        const long long j_max = std::min<long long>(i, d);
        for (long long j = 0; j <= j_max; ++j) {
            const BigInt term = binomial(d, j) * table.closed[i - j];
            if (j % 2 == 0) h += term; else h -= term;
        }
        if (h < 0)
            throw std::logic_error("counting bug: negative h-coefficient h_" + std::to_string(i) +
                                   " = " + h.str());
        if (i >= 2 * s && h != 0)
            throw std::logic_error("counting bug: nonzero h_" + std::to_string(i) + " = " +
                                   h.str() + " beyond expected degree " + std::to_string(2 * s - 1));
        coeffs[i] = h;
    }
    if (coeffs[0] != 1) throw std::logic_error("counting bug: h_0 != 1");

    long long last = 0;
    for (long long i = 0; i <= limit; ++i)
        if (coeffs[i] != 0) last = i;
    coeffs.resize(last + 1);
    return HVector{std::move(coeffs), d};
}

/// Inverse transform: H(n) = sum_i h_i C(n - i + d - 1, d - 1).  Round
/// trips exactly against the table the h-vector came from.
inline std::vector<BigInt> reconstruct_hilbert(const HVector& h, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    std::vector<BigInt> values(n_max + 1);
    for (long long n = 0; n <= n_max; ++n) {
        BigInt total = 0;
        for (std::size_t i = 0; i < h.entries.size(); ++i)
            total += h.entries[i] * binomial(n - static_cast<long long>(i) + h.d - 1, h.d - 1);
        values[n] = total;
    }
    return values;
}

/// Interior count predicted by Ehrhart reciprocity: with D = d - 1 the
/// polytope dimension, the interior series is
///   sum_{n>=1} I(n) lambda^n = lambda^(D+1) h(1/lambda) / (1-lambda)^(D+1),
/// whose n-th coefficient is sum_i h_i C(n + i - 1, D).
inline BigInt interior_count_from_hvector(const HVector& h, long long n) {
    if (n < 0) throw std::invalid_argument("dilation must be non-negative");
    if (n == 0) return 0;
    const int D = h.d - 1;
    BigInt total = 0;
    for (std::size_t i = 0; i < h.entries.size(); ++i)
        total += h.entries[i] * binomial(n + static_cast<long long>(i) - 1, D);
    return total;
}

}  // namespace oddcycle
