#pragma once

/**
 * @file linalg.hpp
 * @brief Exact rank and determinant by fraction-free (Bareiss) elimination.
 */

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclerees {

using rational_matrix = std::vector<std::vector<rational>>;

namespace detail {

/// Bareiss elimination in place; returns the rank. `swaps` counts row exchanges.
inline std::size_t bareiss(rational_matrix& a, std::size_t& swaps) {
    swaps = 0;
    const std::size_t rows = a.size();
    if (rows == 0) {
        return 0;
    }
    const std::size_t cols = a.front().size();
    for (const auto& r : a) {
        if (r.size() != cols) {
            throw std::invalid_argument("bareiss: ragged matrix");
        }
    }
    rational prev(1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            ++swaps;
        }
        const rational& p = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const rational f = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (p * a[i][j] - f * a[rank][j]) / prev;
            }
            a[i][c] = rational(0);
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline std::size_t matrix_rank(rational_matrix a) {
    std::size_t swaps = 0;
    return detail::bareiss(a, swaps);
}

inline std::size_t matrix_nullity(const rational_matrix& a, std::size_t cols) {
    return cols - (a.empty() ? 0 : matrix_rank(a));
}

inline rational determinant(rational_matrix a) {
    const std::size_t n = a.size();
    for (const auto& r : a) {
        if (r.size() != n) {
            throw std::invalid_argument("determinant: matrix is not square");
        }
    }
    if (n == 0) {
        return rational(1);
    }
    std::size_t swaps = 0;
    if (detail::bareiss(a, swaps) < n) {
        return rational(0);
    }
    rational d = a[n - 1][n - 1];
    return swaps % 2 == 0 ? d : -d;
}

}  // namespace cyclerees
