#pragma once

/**
 * @file classify.hpp
 * @brief Linear/fiber type classification and numerical invariants of
 *        Rees algebras of path ideals of cycles.
 */

#include "linalg.hpp"
#include "monomial_ideal.hpp"
#include "rees.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cyclerees {

enum class rees_class { linear, fiber, neither, timeout };

inline std::string to_string(rees_class c) {
    switch (c) {
        case rees_class::linear: return "linear";
        case rees_class::fiber: return "fiber";
        case rees_class::neither: return "neither";
        case rees_class::timeout: return "timeout";
    }
    return "?";
}

/// Single-character cell used in the grid rendering.
inline std::string glyph(rees_class c) {
    switch (c) {
        case rees_class::linear: return "L";
        case rees_class::fiber: return "F";
        case rees_class::neither: return "×";
        case rees_class::timeout: return "?";
    }
    return "?";
}

struct class_record {
    std::size_t n = 0;
    std::size_t t = 0;
    rees_class cls = rees_class::timeout;
    std::size_t gcd = 0;
    std::size_t fiber_dim = 0;
    std::map<std::string, double> ms;  ///< stage -> milliseconds
    std::optional<std::string> witness;  ///< element of J outside L (+ HT) for "neither"
};

/// n - gcd(n, t) + 1
inline std::size_t fiber_dimension(std::size_t n, std::size_t t) {
    check_path_spec({n, t}, true);
    return n - std::gcd(n, t) + 1;
}

/// Circulant with first column c_0 = ... = c_{t-1} = 1, other entries 0.
inline rational_matrix circulant_matrix(std::size_t n, std::size_t t) {
    rational_matrix a(n, std::vector<rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = rational((i + n - j) % n < t ? 1 : 0);
        }
    }
    return a;
}

inline std::size_t circulant_rank(std::size_t n, std::size_t t) {
    check_path_spec({n, t}, true);
    return matrix_rank(circulant_matrix(n, t));
}

namespace detail {

class stopwatch {
public:
    double lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// J = L. Throws budget_exceeded.
inline bool is_linear_type(std::size_t n, std::size_t t, const budget& limits = {}) {
    const path_spec spec{n, t};
    const ideal J = rees_ideal(spec, limits);
    const ideal L = sym_relations(spec);
    const auto gb = J.groebner(make_product_order(J.ring()));
    return contains_all(L, gb->elements, gb->order, limits);
}

/// J = L + HT. Throws budget_exceeded.
inline bool is_fiber_type(std::size_t n, std::size_t t, const budget& limits = {}) {
    const path_spec spec{n, t};
    const ideal J = rees_ideal(spec, limits);
    const ideal LH = sym_plus_fiber(spec, sym_relations(spec), fiber_ideal(spec, limits));
    const auto gb = J.groebner(make_product_order(J.ring()));
    return contains_all(LH, gb->elements, gb->order, limits);
}

/**
 * Classifies one cell. L and L + HT are always contained in J, so each test
 * checks that the reduced basis of J lies in L (resp. L + HT). When
 * gcd(n, t) = 1 the fiber ideal is zero and the second test is skipped.
 * All stages share one deadline; exceeding it yields class timeout.
 */
inline class_record classify(std::size_t n, std::size_t t, const budget& limits = {}) {
    const path_spec spec{n, t};
    check_path_spec(spec);
    class_record rec;
    rec.n = n;
    rec.t = t;
    rec.gcd = std::gcd(n, t);
    rec.fiber_dim = fiber_dimension(n, t);
    detail::stopwatch clock;
    try {
        const ideal J = rees_ideal(spec, limits);
        const auto gb = J.groebner(make_product_order(J.ring()));
        rec.ms["rees"] = clock.lap_ms();
        const ideal L = sym_relations(spec);
        auto miss = first_non_member(L, gb->elements, gb->order, limits);
        rec.ms["sym"] = clock.lap_ms();
        if (!miss) {
            rec.cls = rees_class::linear;
            return rec;
        }
        if (rec.gcd > 1) {
            const ideal H = fiber_ideal(spec, limits);
            rec.ms["fiber"] = clock.lap_ms();
            miss = first_non_member(sym_plus_fiber(spec, L, H), gb->elements, gb->order, limits);
            rec.ms["sym+fiber"] = clock.lap_ms();
            if (!miss) {
                rec.cls = rees_class::fiber;
                return rec;
            }
        }
        rec.cls = rees_class::neither;
        rec.witness = to_string(gb->elements[*miss]);
    } catch (const budget_exceeded&) {
        rec.cls = rees_class::timeout;
        rec.ms["total"] = clock.lap_ms();
        rec.witness.reset();
    }
    return rec;
}

/**
 * Every cell 1 <= t <= n-1 for n_min <= n <= n_max, run on `jobs` worker
 * threads with a per-cell budget of `cell_seconds`. Sorted by (n, t).
 */
inline std::vector<class_record> classification_table(std::size_t n_min, std::size_t n_max, double cell_seconds,
                                                      std::size_t jobs = 1) {
    if (n_min < 3 || n_min > n_max) {
        throw std::invalid_argument("classification_table: need 3 <= n_min <= n_max");
    }
    std::vector<path_spec> cells;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        for (std::size_t t = 1; t < n; ++t) {
            cells.push_back({n, t});
        }
    }
    std::vector<class_record> out(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            out[i] = classify(cells[i].n, cells[i].t, budget::seconds(cell_seconds));
        }
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(cells.size(), 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return out;
}

/// Grid with one row per n: "C6  L F F F L".
inline std::string render_grid(const std::vector<class_record>& records) {
    std::map<std::size_t, std::vector<const class_record*>> rows;
    for (const auto& r : records) {
        rows[r.n].push_back(&r);
    }
    std::ostringstream os;
    for (auto& [n, row] : rows) {
        std::sort(row.begin(), row.end(), [](auto* a, auto* b) { return a->t < b->t; });
        std::string label = "C" + std::to_string(n);
        label.resize(4, ' ');
        os << label;
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i == 0 ? "" : " ") << glyph(row[i]->cls);
        }
        os << '\n';
    }
    return os.str();
}

inline std::string render_csv(const std::vector<class_record>& records, bool timings = false) {
    std::ostringstream os;
    os << "n,t,class,gcd,fiber_dim";
    std::vector<std::string> stages{"rees", "sym", "fiber", "sym+fiber", "total"};
    if (timings) {
        for (const auto& s : stages) {
            os << ",ms_" << s;
        }
    }
    os << '\n';
    for (const auto& r : records) {
        os << r.n << ',' << r.t << ',' << to_string(r.cls) << ',' << r.gcd << ',' << r.fiber_dim;
        if (timings) {
            for (const auto& s : stages) {
                os << ',';
                if (auto it = r.ms.find(s); it != r.ms.end()) {
                    os << it->second;
                }
            }
        }
        os << '\n';
    }
    return os.str();
}

/// Expansion of the closed-form Hilbert series of R(I_{n-2}(C_n)).
inline hilbert_series hilbert_closed_form_n_minus_2(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("hilbert_closed_form_n_minus_2: n must be at least 3");
    }
    const zpoly::coeffs one_plus_z{1, 1};
    zpoly::coeffs num;
    hilbert_series h;
    if (n % 2 == 1) {
        const std::size_t s = (n - 1) / 2;
        for (std::size_t k = 0; k < s; ++k) {
            num = zpoly::add(num, zpoly::shift(zpoly::power(one_plus_z, 2 * k + 1), s - 1 - k));
        }
        num = zpoly::add(num, zpoly::shift({1}, s));
        h = {num, 2 * s + 2};
    } else {
        const std::size_t s = n / 2;
        for (std::size_t k = 0; k < s; ++k) {
            num = zpoly::add(num, zpoly::shift(zpoly::power(one_plus_z, 2 * k), s - 1 - k));
        }
        h = {num, 2 * s + 1};
    }
    return h.canonical();
}

/// Hilbert series of T / in(J) for t = n-2 under the product order.
inline hilbert_series computed_hilbert_n_minus_2(std::size_t n, const budget& limits = {}) {
    const ideal J = rees_ideal({n, n - 2}, limits);
    return hilbert_numerator(initial_ideal(J, make_product_order(J.ring()), limits));
}

inline bool verify_hilbert(std::size_t n, const budget& limits = {}) {
    return computed_hilbert_n_minus_2(n, limits) == hilbert_closed_form_n_minus_2(n);
}

/// Palindromic h-vector of the computed series for t = n-2.
inline bool gorenstein_witness(std::size_t n, const budget& limits = {}) {
    return computed_hilbert_n_minus_2(n, limits).is_palindromic();
}

/**
 * The Artinian reduction for odd n in K[x1, ..., x_{n-1}]:
 * (x_i^2 - x_{i+1} x_{i+2} for i = 1..n-3, x_{n-2}^2, x_{n-1}^2, x1 x2),
 * with lex x1 > ... > x_{n-1} as its order.
 */
inline ideal artinian_reduction(std::size_t n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("artinian_reduction: n must be odd and at least 3");
    }
    variable_block xs{"X", {}};
    for (std::size_t i = 1; i < n; ++i) {
        xs.variables.push_back("x" + std::to_string(i));
    }
    auto ring = std::make_shared<const ring_spec>(n, std::vector<variable_block>{xs});
    const order_ptr order = make_simple_order(ring, base_order::lex);
    const std::size_t m = n - 1;
    auto var = [&](std::size_t i, unsigned e = 1) { return monomial::variable(m, i - 1, e); };
    std::vector<polynomial> gens;
    for (std::size_t i = 1; i + 3 <= n; ++i) {
        gens.emplace_back(order, std::vector<term>{{rational(1), var(i, 2)}, {rational(-1), var(i + 1) * var(i + 2)}});
    }
    gens.push_back(polynomial::from_monomial(order, var(n - 2, 2)));
    gens.push_back(polynomial::from_monomial(order, var(n - 1, 2)));
    gens.push_back(polynomial::from_monomial(order, var(1) * var(2)));
    return ideal(ring, std::move(gens));
}

struct socle_report {
    std::size_t type = 0;  ///< socle dimension
    std::size_t length = 0;  ///< vector-space dimension of the quotient
    std::vector<std::size_t> socle_by_degree;
};

/// Socle of K[x] / I for an Artinian homogeneous ideal, via its standard monomials.
inline socle_report artinian_socle(const ideal& I, const order_ptr& order, const budget& limits = {}) {
    const auto gb = I.groebner(order, gb_options{limits, std::nullopt});
    const auto lead = gb->leading_monomials();
    const std::size_t nv = order->size();
    for (std::size_t v = 0; v < nv; ++v) {
        const bool pure = std::any_of(lead.begin(), lead.end(), [&](const monomial& m) {
            return m.degree() == m[v] && m[v] > 0;
        });
        if (!pure) {
            throw std::logic_error("artinian_socle: quotient is not Artinian");
        }
    }
    auto standard = [&](const monomial& m) {
        return std::none_of(lead.begin(), lead.end(), [&](const monomial& g) { return g.divides(m); });
    };
    std::vector<std::vector<monomial>> basis{{monomial(nv)}};
    while (true) {
        std::vector<monomial> next;
        for (const auto& b : basis.back()) {
            std::size_t last = 0;
            for (std::size_t v = 0; v < nv; ++v) {
                if (b[v] != 0) {
                    last = v;
                }
            }
            for (std::size_t v = b.is_one() ? 0 : last; v < nv; ++v) {
                monomial c = b * monomial::variable(nv, v);
                if (standard(c)) {
                    next.push_back(c);
                }
            }
        }
        if (next.empty()) {
            break;
        }
        basis.push_back(std::move(next));
    }
    socle_report rep;
    for (std::size_t d = 0; d < basis.size(); ++d) {
        rep.length += basis[d].size();
        if (d + 1 == basis.size()) {
            rep.socle_by_degree.push_back(basis[d].size());
            continue;
        }
        const auto& up = basis[d + 1];
        std::map<monomial, std::size_t, bool (*)(const monomial&, const monomial&)> index(
            &monomial_ideal::canonical_less);
        for (std::size_t k = 0; k < up.size(); ++k) {
            index[up[k]] = k;
        }
        rational_matrix mat(nv * up.size(), std::vector<rational>(basis[d].size()));
        for (std::size_t col = 0; col < basis[d].size(); ++col) {
            for (std::size_t v = 0; v < nv; ++v) {
                const polynomial image = normal_form(
                    polynomial::from_monomial(order, basis[d][col] * monomial::variable(nv, v)), gb->elements, order);
                for (const auto& tm : image.terms()) {
                    mat[v * up.size() + index.at(tm.mono)][col] = tm.coeff;
                }
            }
        }
        rep.socle_by_degree.push_back(matrix_nullity(mat, basis[d].size()));
    }
    rep.type = std::accumulate(rep.socle_by_degree.begin(), rep.socle_by_degree.end(), std::size_t{0});
    return rep;
}

/// Cohen-Macaulay type of R(I_{n-2}(C_n)) for odd n, as the socle dimension of the Artinian reduction.
inline socle_report cm_type_report(std::size_t n, const budget& limits = {}) {
    const ideal A = artinian_reduction(n);
    return artinian_socle(A, make_simple_order(A.ring(), base_order::lex), limits);
}

inline std::size_t cm_type_odd(std::size_t n, const budget& limits = {}) { return cm_type_report(n, limits).type; }

}  // namespace cyclerees
