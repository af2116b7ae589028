#pragma once

/**
 * @file rees.hpp
 * @brief Path ideals of cycles and the ideals attached to their Rees algebras.
 *
 * Conventions: the t-paths of C_n are the n cyclic windows
 * u_j = x_j x_{j+1} ... x_{j+t-1}, j = 1..n, with every index reduced mod n
 * (x_n = x_0, y_n = y_0). The Rees algebra is presented as T / J with
 * T = K[y, x] and J the kernel of y_j -> u_j s.
 */

#include "groebner.hpp"
#include "text.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclerees {

struct path_spec {
    std::size_t n;
    std::size_t t;
};

inline void check_path_spec(const path_spec& spec, bool allow_full = false) {
    if (spec.n < 3) {
        throw std::invalid_argument("path ideal: the cycle needs n >= 3 vertices");
    }
    const std::size_t top = allow_full ? spec.n : spec.n - 1;
    if (spec.t < 1 || spec.t > top) {
        throw std::invalid_argument("path ideal: t = " + std::to_string(spec.t) + " out of range 1.." +
                                    std::to_string(top) + " for n = " + std::to_string(spec.n));
    }
}

/// The polynomial rings and orders used for one cycle size.
struct cycle_rings {
    explicit cycle_rings(std::size_t n)
        : n(n),
          T(make_cycle_ring(n, false)),
          product(make_product_order(T)),
          Ts(make_cycle_ring(n, true)),
          product_s(make_product_order(Ts)) {
        std::vector<bool> keep_y(T->size(), false);
        std::vector<bool> keep_x(T->size(), false);
        for (std::size_t i = 0; i < n; ++i) {
            keep_y[i] = true;
            keep_x[n + i] = true;
        }
        R = T->subring(keep_y).first;
        S = T->subring(keep_x).first;
        y_order = make_product_order(R);
        x_order = make_product_order(S);
    }

    std::size_t n;
    ring_ptr T;   ///< K[y, x]
    order_ptr product;
    ring_ptr Ts;  ///< K[y, x, s]
    order_ptr product_s;
    ring_ptr R;   ///< K[y]
    order_ptr y_order;
    ring_ptr S;   ///< K[x]
    order_ptr x_order;

    [[nodiscard]] std::size_t x(long i) const { return x_var(n, i); }
    [[nodiscard]] std::size_t y(long i) const { return y_var(n, i); }

    /// Embedding of K[y] into T (Y is the leading block of both rings).
    [[nodiscard]] polynomial y_to_T(const polynomial& p) const {
        std::vector<std::size_t> map(n);
        for (std::size_t i = 0; i < n; ++i) {
            map[i] = i;
        }
        return map_to_ring(p, product, map);
    }

    [[nodiscard]] polynomial parse(const std::string& text) const { return parse_polynomial(text, product); }
};

/// Window monomial u_j = x_j ... x_{j+t-1} in T.
inline monomial window_monomial(const cycle_rings& rings, std::size_t t, long j) {
    monomial m(rings.T->size());
    for (std::size_t k = 0; k < t; ++k) {
        const std::size_t v = rings.x(j + static_cast<long>(k));
        m.set(v, m[v] + 1);
    }
    return m;
}

/// Windows u_1, ..., u_n (u_n = u_0); index j-1 holds u_j.
inline std::vector<monomial> window_monomials(const cycle_rings& rings, std::size_t t) {
    std::vector<monomial> out;
    for (std::size_t j = 1; j <= rings.n; ++j) {
        out.push_back(window_monomial(rings, t, static_cast<long>(j)));
    }
    return out;
}

/// I_t(C_n) in K[x], generated by the n window monomials (deduplicated).
inline ideal path_ideal(const path_spec& spec) {
    check_path_spec(spec);
    const cycle_rings rings(spec.n);
    std::vector<bool> keep(rings.T->size(), false);
    for (std::size_t i = 0; i < spec.n; ++i) {
        keep[spec.n + i] = true;
    }
    const auto map = rings.T->subring(keep).second;
    std::vector<polynomial> gens;
    std::vector<monomial> seen;
    for (const auto& u : window_monomials(rings, spec.t)) {
        if (std::find(seen.begin(), seen.end(), u) != seen.end()) {
            continue;
        }
        seen.push_back(u);
        gens.push_back(map_to_subring(polynomial::from_monomial(rings.product, u), rings.x_order, map));
    }
    return ideal(rings.S, std::move(gens));
}

/**
 * L: the lcm syzygies (lcm/u_i) y_i - (lcm/u_j) y_j for 1 <= i < j <= n, which
 * generate the first syzygy module of the path ideal. T / L is the
 * symmetric algebra.
 */
inline ideal sym_relations(const path_spec& spec) {
    check_path_spec(spec);
    const cycle_rings rings(spec.n);
    const auto u = window_monomials(rings, spec.t);
    std::vector<polynomial> gens;
    for (std::size_t i = 1; i <= spec.n; ++i) {
        for (std::size_t j = i + 1; j <= spec.n; ++j) {
            const monomial& ui = u[i - 1];
            const monomial& uj = u[j - 1];
            const monomial l = lcm(ui, uj);
            const monomial yi = monomial::variable(rings.T->size(), rings.y(static_cast<long>(i)));
            const monomial yj = monomial::variable(rings.T->size(), rings.y(static_cast<long>(j)));
            gens.emplace_back(rings.product, std::vector<term>{{rational(1), (l / ui) * yi}, {rational(-1), (l / uj) * yj}});
        }
    }
    return ideal(rings.T, std::move(gens));
}

/// (y_j - u_j s : j = 1..n) in K[y, x, s].
inline ideal graph_ideal(const cycle_rings& rings, std::size_t t) {
    std::vector<polynomial> gens;
    const auto u = window_monomials(rings, t);
    for (std::size_t j = 1; j <= rings.n; ++j) {
        monomial y = monomial::variable(rings.Ts->size(), rings.y(static_cast<long>(j)));
        monomial us = monomial::variable(rings.Ts->size(), s_var(rings.n));
        for (std::size_t v = 0; v < rings.T->size(); ++v) {
            if (u[j - 1][v] != 0) {
                us.set(v, u[j - 1][v]);
            }
        }
        gens.emplace_back(rings.product_s, std::vector<term>{{rational(1), y}, {rational(-1), us}});
    }
    return ideal(rings.Ts, std::move(gens));
}

/**
 * J = ker(y_j -> u_j s), obtained by eliminating s from the graph ideal.
 * The result carries its reduced Groebner basis for the product order.
 */
inline ideal rees_ideal(const path_spec& spec, const budget& limits = {}) {
    check_path_spec(spec);
    const cycle_rings rings(spec.n);
    auto elim = eliminate(graph_ideal(rings, spec.t), {s_var(spec.n)}, *rings.product_s, limits);
    return std::move(elim.result);
}

/**
 * H = J intersected with K[y]: the fiber relations, computed by eliminating
 * X and s together from the graph ideal. Also accepts t = n, where all
 * windows coincide. Returned in K[y] with its degrevlex basis cached.
 */
inline ideal fiber_ideal(const path_spec& spec, const budget& limits = {}) {
    check_path_spec(spec, true);
    const cycle_rings rings(spec.n);
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < spec.n; ++i) {
        drop.push_back(spec.n + i);
    }
    drop.push_back(s_var(spec.n));
    auto elim = eliminate(graph_ideal(rings, spec.t), drop, *rings.product_s, limits);
    return std::move(elim.result);
}

/// The binomials m_i - m_d, m_i = product of y_j over 1 <= j <= n with j = i mod d.
inline ideal fiber_ideal_closed_form(const path_spec& spec) {
    check_path_spec(spec, true);
    const cycle_rings rings(spec.n);
    const std::size_t d = std::gcd(spec.n, spec.t);
    auto m = [&](std::size_t i) {
        monomial out(rings.R->size());
        for (std::size_t j = 1; j <= spec.n; ++j) {
            if (j % d == i % d) {
                out.set(rings.y(static_cast<long>(j)), 1);
            }
        }
        return out;
    };
    std::vector<polynomial> gens;
    for (std::size_t i = 1; i < d; ++i) {
        gens.emplace_back(rings.y_order, std::vector<term>{{rational(1), m(i)}, {rational(-1), m(d)}});
    }
    return ideal(rings.R, std::move(gens));
}

/// L + H T for a fiber ideal H given in K[y].
inline ideal sym_plus_fiber(const path_spec& spec, const ideal& L, const ideal& H) {
    const cycle_rings rings(spec.n);
    auto gens = L.generators();
    for (const auto& h : H.generators()) {
        gens.push_back(rings.y_to_T(h));
    }
    return ideal(rings.T, std::move(gens));
}

struct named_polynomial {
    std::string name;
    polynomial poly;
};

inline std::vector<polynomial> polys_of(const std::vector<named_polynomial>& family) {
    std::vector<polynomial> out;
    out.reserve(family.size());
    for (const auto& f : family) {
        out.push_back(f.poly);
    }
    return out;
}

namespace detail {

inline monomial y_product(const cycle_rings& rings, std::size_t from, std::size_t to, int parity) {
    monomial m(rings.T->size());
    for (std::size_t i = from; i < to; ++i) {
        if (parity < 0 || static_cast<int>(i % 2) == parity) {
            const auto v = rings.y(static_cast<long>(i));
            m.set(v, m[v] + 1);
        }
    }
    return m;
}

inline monomial x_product(const cycle_rings& rings, long from, long to) {
    monomial m(rings.T->size());
    for (long i = from; i <= to; ++i) {
        const auto v = rings.x(i);
        m.set(v, m[v] + 1);
    }
    return m;
}

inline monomial xv(const cycle_rings& rings, long i) { return monomial::variable(rings.T->size(), rings.x(i)); }
inline monomial yv(const cycle_rings& rings, long i) { return monomial::variable(rings.T->size(), rings.y(i)); }

inline polynomial binomial(const cycle_rings& rings, const monomial& a, const monomial& b) {
    return polynomial(rings.product, {{rational(1), a}, {rational(-1), b}});
}

}  // namespace detail

/**
 * Generators for t = n-2:
 *   f_j = x_{j-2} y_j - x_j y_{j+1}                               (j = 1..n-1)
 *   g_k = x_{2k-2} prod_{odd i < 2k} y_i - x_{n-2} prod_{even i < 2k} y_i   (k = 1..floor(n/2))
 *   h   = prod_{odd i < n} y_i - prod_{even i < n} y_i             (n even)
 */
inline std::vector<named_polynomial> family_n_minus_2(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("family_n_minus_2: n must be at least 3");
    }
    const cycle_rings rings(n);
    using namespace detail;
    const long N = static_cast<long>(n);
    std::vector<named_polynomial> out;
    for (long j = 1; j <= N - 1; ++j) {
        out.push_back({"f" + std::to_string(j), binomial(rings, xv(rings, j - 2) * yv(rings, j), xv(rings, j) * yv(rings, j + 1))});
    }
    for (long k = 1; k <= N / 2; ++k) {
        const auto two_k = static_cast<std::size_t>(2 * k);
        out.push_back({"g" + std::to_string(k), binomial(rings, xv(rings, 2 * k - 2) * y_product(rings, 0, two_k, 1),
                                                         xv(rings, N - 2) * y_product(rings, 0, two_k, 0))});
    }
    if (n % 2 == 0) {
        out.push_back({"h", binomial(rings, y_product(rings, 0, n, 1), y_product(rings, 0, n, 0))});
    }
    return out;
}

/**
 * Generators for t = n/2 (n even):
 *   f_j = x_{n/2+j} y_j - x_j y_{j+1}                                   (j = 1..n-1)
 *   g_k = y_k prod_{i=0}^{k-1} x_i - y_0 prod_{i=n/2}^{k-1+n/2} x_i       (k = 1..n/2-1)
 *   h_l = y_l y_{l+n/2} - y_0 y_{n/2}                                   (l = 1..n/2-1)
 */
inline std::vector<named_polynomial> family_half(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("family_half: n must be even and at least 4");
    }
    const cycle_rings rings(n);
    using namespace detail;
    const long N = static_cast<long>(n);
    const long H = N / 2;
    std::vector<named_polynomial> out;
    for (long j = 1; j <= N - 1; ++j) {
        out.push_back({"f" + std::to_string(j), binomial(rings, xv(rings, H + j) * yv(rings, j), xv(rings, j) * yv(rings, j + 1))});
    }
    for (long k = 1; k <= H - 1; ++k) {
        out.push_back({"g" + std::to_string(k), binomial(rings, yv(rings, k) * x_product(rings, 0, k - 1),
                                                         yv(rings, 0) * x_product(rings, H, k - 1 + H))});
    }
    for (long l = 1; l <= H - 1; ++l) {
        out.push_back({"h" + std::to_string(l), binomial(rings, yv(rings, l) * yv(rings, l + H), yv(rings, 0) * yv(rings, H))});
    }
    return out;
}

/// f_1, ..., f_n for t = n-2 (f_n = -g_1), generating L as an ideal.
inline std::vector<polynomial> linear_relations_n_minus_2(std::size_t n) {
    const cycle_rings rings(n);
    using namespace detail;
    std::vector<polynomial> out;
    for (long j = 1; j <= static_cast<long>(n); ++j) {
        out.push_back(binomial(rings, xv(rings, j - 2) * yv(rings, j), xv(rings, j) * yv(rings, j + 1)));
    }
    return out;
}

/// f_1, ..., f_n for t = n/2.
inline std::vector<polynomial> linear_relations_half(std::size_t n) {
    const cycle_rings rings(n);
    using namespace detail;
    const long H = static_cast<long>(n / 2);
    std::vector<polynomial> out;
    for (long j = 1; j <= static_cast<long>(n); ++j) {
        out.push_back(binomial(rings, xv(rings, H + j) * yv(rings, j), xv(rings, j) * yv(rings, j + 1)));
    }
    return out;
}

/// Square matrix of polynomials, row-major.
class poly_matrix {
public:
    poly_matrix(std::size_t dim, const order_ptr& order) : dim_(dim), data_(dim * dim, polynomial(order)) {}

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    polynomial& operator()(std::size_t i, std::size_t j) { return data_.at(i * dim_ + j); }
    const polynomial& operator()(std::size_t i, std::size_t j) const { return data_.at(i * dim_ + j); }

    [[nodiscard]] bool is_skew_symmetric() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i; j < dim_; ++j) {
                if (!((*this)(i, j) + (*this)(j, i)).is_zero()) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    std::size_t dim_;
    std::vector<polynomial> data_;
};

/**
 * Relation matrix of the Jacobian dual for t = n-2 (n even): f = A x with
 * f = (f_1, ..., f_n) and x = (x_0, x_1, ..., x_{n-1}), i.e. column k (0-based)
 * pairs with x_k. Row j-1 holds y_j at column j-2 and -y_{j+1} at column j
 * (mod n), which makes A skew-symmetric. Entries lie in K[y] inside T.
 */
inline poly_matrix jacobian_dual(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("jacobian_dual: n must be even and at least 4");
    }
    const cycle_rings rings(n);
    poly_matrix A(n, rings.product);
    for (long j = 1; j <= static_cast<long>(n); ++j) {
        const std::size_t row = static_cast<std::size_t>(j - 1);
        A(row, cyclic(j - 2, n)) += polynomial::variable(rings.product, rings.y(j));
        A(row, cyclic(j, n)) -= polynomial::variable(rings.product, rings.y(j + 1));
    }
    if (!A.is_skew_symmetric()) {
        throw std::logic_error("jacobian_dual: matrix is not skew-symmetric");
    }
    return A;
}

namespace detail {

inline polynomial pfaffian_rec(const poly_matrix& A, std::vector<std::size_t>& idx, const order_ptr& order) {
    if (idx.empty()) {
        return polynomial::constant(order, 1);
    }
    polynomial total(order);
    const std::size_t first = idx.front();
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const polynomial& a = A(first, idx[k]);
        if (a.is_zero()) {
            continue;
        }
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t m = 1; m < idx.size(); ++m) {
            if (m != k) {
                rest.push_back(idx[m]);
            }
        }
        polynomial sub = a * pfaffian_rec(A, rest, order);
        // 1-based column k+1 of the current submatrix: sign (-1)^(k+1).
        if (k % 2 == 1) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    return total;
}

}  // namespace detail

/// Pfaffian by recursive expansion along the first row.
inline polynomial pfaffian(const poly_matrix& A) {
    if (A.dim() % 2 != 0) {
        throw std::invalid_argument("pfaffian: odd dimension");
    }
    if (!A.is_skew_symmetric()) {
        throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
    }
    if (A.dim() == 0) {
        throw std::invalid_argument("pfaffian: empty matrix");
    }
    auto idx = detail::iota(A.dim());
    return detail::pfaffian_rec(A, idx, A(0, 0).order());
}

/// The fiber relation h = prod of odd-index y minus prod of even-index y (n even), in T.
inline polynomial fiber_relation_h(std::size_t n) {
    const cycle_rings rings(n);
    return detail::binomial(rings, detail::y_product(rings, 0, n, 1), detail::y_product(rings, 0, n, 0));
}

}  // namespace cyclerees
