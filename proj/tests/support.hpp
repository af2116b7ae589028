#pragma once

// Test-side oracles and random generators. Nothing here reuses the
// library's Hilbert recursion, Bareiss elimination or Pfaffian code.

#include "cyclerees/cyclerees.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace cyclerees;

inline polynomial P(const cycle_rings& rings, const std::string& text) { return rings.parse(text); }

inline ring_ptr small_ring(std::size_t nvars) {
    variable_block b{"V", {}};
    for (std::size_t i = 0; i < nvars; ++i) {
        b.variables.push_back("v" + std::to_string(i));
    }
    return std::make_shared<const ring_spec>(nvars, std::vector<variable_block>{b});
}

inline monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
        m.set(v, e(rng));
    }
    return m;
}

inline polynomial random_polynomial(std::mt19937_64& rng, const order_ptr& order, std::size_t max_terms,
                                    unsigned max_exp, int coeff_range = 5) {
    std::uniform_int_distribution<std::size_t> nt(0, max_terms);
    std::uniform_int_distribution<int> c(-coeff_range, coeff_range);
    std::vector<term> terms;
    const std::size_t k = nt(rng);
    for (std::size_t i = 0; i < k; ++i) {
        terms.push_back({rational(c(rng)), random_monomial(rng, order->size(), max_exp)});
    }
    return polynomial(order, std::move(terms));
}

/// Random homogeneous binomial m1 - m2 of the given degree.
inline polynomial random_binomial(std::mt19937_64& rng, const order_ptr& order, unsigned degree) {
    const std::size_t n = order->size();
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    auto mono = [&] {
        monomial m(n);
        for (unsigned i = 0; i < degree; ++i) {
            const auto v = var(rng);
            m.set(v, m[v] + 1);
        }
        return m;
    };
    return polynomial(order, {{rational(1), mono()}, {rational(-1), mono()}});
}

/// Numerator of HS(K[v]/M) over (1-z)^N by inclusion-exclusion over subsets of generators.
inline hilbert_series inclusion_exclusion(const std::vector<monomial>& gens, std::size_t nvars) {
    std::vector<std::int64_t> num(1, 0);
    const std::size_t k = gens.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        monomial l(nvars);
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) {
                l = lcm(l, gens[i]);
                ++bits;
            }
        }
        const std::size_t d = l.degree();
        if (num.size() <= d) {
            num.resize(d + 1, 0);
        }
        num[d] += (bits % 2 == 0) ? 1 : -1;
    }
    return hilbert_series{num, nvars}.canonical();
}

/// Determinant by cofactor expansion along the first row.
inline polynomial laplace_det(const poly_matrix& A, const order_ptr& order) {
    const std::size_t n = A.dim();
    if (n == 0) {
        return polynomial::constant(order, 1);
    }
    if (n == 1) {
        return A(0, 0);
    }
    polynomial total(order);
    for (std::size_t j = 0; j < n; ++j) {
        if (A(0, j).is_zero()) {
            continue;
        }
        poly_matrix minor(n - 1, order);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) {
                    minor(r - 1, cc++) = A(r, c);
                }
            }
        }
        const polynomial term_j = A(0, j) * laplace_det(minor, order);
        total = j % 2 == 0 ? total + term_j : total - term_j;
    }
    return total;
}

/// Rank over Q by plain Gaussian elimination with GMP rationals.
inline std::size_t gauss_rank(const std::vector<std::vector<long>>& m) {
    std::vector<std::vector<mpq_class>> a;
    for (const auto& row : m) {
        a.emplace_back(row.begin(), row.end());
    }
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != rank && a[i][c] != 0) {
                const mpq_class f = a[i][c] / a[rank][c];
                for (std::size_t j = c; j < cols; ++j) {
                    a[i][j] -= f * a[rank][j];
                }
            }
        }
        ++rank;
    }
    return rank;
}

/// Ideal generated by a named family.
inline ideal family_ideal(const std::vector<named_polynomial>& fam) {
    return ideal(fam.front().poly.ring(), polys_of(fam));
}

}  // namespace testing_support
