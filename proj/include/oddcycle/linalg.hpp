#pragma once

#include "oddcycle/bigint.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oddcycle {

/*
 * Exact integer rank via fraction-free (Bareiss) Gaussian elimination.
 *
 * Every entry produced during elimination is a minor of the input matrix,
 * so the division by the previous pivot is exact over the integers.  No
 * floating point is used anywhere: facet decisions and dimension claims
 * rest on these ranks being exact.
 */
inline int matrix_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    int rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;  // column already zero below current rank
        m[rank].swap(m[pivot_row]);

        const BigInt& pivot = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            // every remaining row is rescaled, even where the pivot-column
            // entry is zero; skipping would break the exact-division invariant
            for (std::size_t c = col + 1; c < cols; ++c) {
                BigInt numerator = pivot * m[r][c] - m[r][col] * m[rank][c];
                BigInt quotient, remainder;
                boost::multiprecision::divide_qr(numerator, prev_pivot, quotient, remainder);
                if (remainder != 0)
                    throw std::logic_error("fraction-free elimination produced a non-integer");
                m[r][c] = quotient;
            }
            m[r][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

/// Affine dimension of a point set: rank of the differences against the
/// first point.  Empty set -> -1, single point -> 0.
inline int affine_dimension(const std::vector<std::vector<long long>>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    const std::size_t dim = points[0].size();
    std::vector<std::vector<BigInt>> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != dim) throw std::invalid_argument("point dimension mismatch");
        std::vector<BigInt> d(dim);
        for (std::size_t j = 0; j < dim; ++j) d[j] = BigInt(points[i][j]) - points[0][j];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs));
}

}  // namespace oddcycle
