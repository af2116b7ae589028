#pragma once

/**
 * @file monomial_ideal.hpp
 * @brief Monomial ideals, initial ideals and Hilbert series.
 *
 * Hilbert series of T / M are computed by pivoting on a variable p:
 *   HS(T/M) = HS(T/(M + (p))) + z^deg(p) HS(T/(M : p)).
 * Numerators are kept over (1-z)^N with N the number of ring variables and
 * then reduced by common (1-z) factors.
 */

#include "groebner.hpp"
#include "text.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclerees {

/// Monomial ideal stored by its minimal generators, sorted by degree then exponents.
class monomial_ideal {
public:
    explicit monomial_ideal(ring_ptr ring, std::vector<monomial> gens = {}) : ring_(std::move(ring)) {
        for (const auto& g : gens) {
            if (g.size() != ring_->size()) {
                throw std::invalid_argument("monomial_ideal: generator does not belong to the ring");
            }
        }
        gens_ = minimalize(std::move(gens));
    }

    [[nodiscard]] const ring_ptr& ring() const noexcept { return ring_; }
    [[nodiscard]] const std::vector<monomial>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return gens_.empty(); }
    [[nodiscard]] bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

    [[nodiscard]] bool contains(const monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const monomial& g) { return g.divides(m); });
    }

    friend bool operator==(const monomial_ideal& a, const monomial_ideal& b) {
        return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
    }

    static bool canonical_less(const monomial& a, const monomial& b) {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        for (std::size_t v = 0; v < a.size(); ++v) {
            if (a[v] != b[v]) {
                return a[v] > b[v];
            }
        }
        return false;
    }

private:
    static std::vector<monomial> minimalize(std::vector<monomial> gens) {
        std::sort(gens.begin(), gens.end(), canonical_less);
        std::vector<monomial> out;
        for (auto& g : gens) {
            const bool redundant =
                std::any_of(out.begin(), out.end(), [&](const monomial& k) { return k.divides(g); });
            if (!redundant) {
                out.push_back(std::move(g));
            }
        }
        return out;
    }

    ring_ptr ring_;
    std::vector<monomial> gens_;
};

inline std::string to_string(const monomial_ideal& M) {
    std::string out = "(";
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += to_string(*M.ring(), M.generators()[i]);
    }
    return out + ")";
}

/// M : p, generated by m / gcd(m, p).
inline monomial_ideal colon_mono(const monomial_ideal& M, const monomial& p) {
    std::vector<monomial> gens;
    gens.reserve(M.size());
    for (const auto& m : M.generators()) {
        gens.push_back(m / gcd(m, p));
    }
    return monomial_ideal(M.ring(), std::move(gens));
}

/// M + (p).
inline monomial_ideal sum_mono(const monomial_ideal& M, const monomial& p) {
    auto gens = M.generators();
    gens.push_back(p);
    return monomial_ideal(M.ring(), std::move(gens));
}

/// Leading monomials of the reduced Groebner basis of I.
inline monomial_ideal initial_ideal(const ideal& I, const order_ptr& order, const budget& limits = {}) {
    if (I.is_zero()) {
        return monomial_ideal(I.ring());
    }
    const auto gb = I.groebner(order, gb_options{limits, std::nullopt});
    return monomial_ideal(I.ring(), gb->leading_monomials());
}

inline bool is_squarefree(const monomial_ideal& M) {
    return std::all_of(M.generators().begin(), M.generators().end(),
                       [](const monomial& m) { return m.is_squarefree(); });
}

/// Every minimal generator has degree at most 1 in each variable of block X.
inline bool x_condition(const monomial_ideal& M) {
    const auto xs = M.ring()->block_indices("X");
    if (xs.empty()) {
        throw std::invalid_argument("x_condition: ring has no X block");
    }
    for (const auto& m : M.generators()) {
        for (auto v : xs) {
            if (m[v] > 1) {
                return false;
            }
        }
    }
    return true;
}

class arithmetic_overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Integer polynomials in z, coefficient k at index k.
namespace zpoly {

using coeffs = std::vector<std::int64_t>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw arithmetic_overflow("Hilbert series coefficient overflow");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw arithmetic_overflow("Hilbert series coefficient overflow");
    }
    return r;
}

inline void trim(coeffs& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

inline coeffs add(const coeffs& a, const coeffs& b) {
    coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] = checked_add(r[i], b[i]);
    }
    trim(r);
    return r;
}

inline coeffs mul(const coeffs& a, const coeffs& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

/// z^k * a
inline coeffs shift(const coeffs& a, std::size_t k) {
    if (a.empty()) {
        return {};
    }
    coeffs r(k, 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

/// a^e
inline coeffs power(const coeffs& a, unsigned e) {
    coeffs r{1};
    for (unsigned i = 0; i < e; ++i) {
        r = mul(r, a);
    }
    return r;
}

inline std::int64_t value_at_one(const coeffs& a) {
    std::int64_t s = 0;
    for (auto c : a) {
        s = checked_add(s, c);
    }
    return s;
}

/// a / (1 - z); requires a(1) = 0.
inline coeffs divide_one_minus_z(const coeffs& a) {
    if (a.empty()) {
        return {};
    }
    coeffs q(a.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        acc = checked_add(acc, a[k]);
        q[k] = acc;
    }
    if (checked_add(acc, a.back()) != 0) {
        throw std::logic_error("divide_one_minus_z: not divisible");
    }
    trim(q);
    return q;
}

}  // namespace zpoly

/// numerator / (1 - z)^denom_power.
struct hilbert_series {
    std::vector<std::int64_t> numerator;
    std::size_t denom_power = 0;

    /// Divides out common factors of (1 - z).
    [[nodiscard]] hilbert_series canonical() const {
        hilbert_series h = *this;
        zpoly::trim(h.numerator);
        while (h.denom_power > 0 && !h.numerator.empty() && zpoly::value_at_one(h.numerator) == 0) {
            h.numerator = zpoly::divide_one_minus_z(h.numerator);
            --h.denom_power;
        }
        if (h.numerator.empty()) {
            h.denom_power = 0;
        }
        return h;
    }

    [[nodiscard]] bool is_palindromic() const {
        const auto& a = numerator;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != a[a.size() - 1 - i]) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const hilbert_series&, const hilbert_series&) = default;
};

inline std::string to_string(const hilbert_series& h) {
    std::string num;
    for (std::size_t k = 0; k < h.numerator.size(); ++k) {
        const auto c = h.numerator[k];
        if (c == 0) {
            continue;
        }
        if (!num.empty()) {
            num += c < 0 ? " - " : " + ";
        } else if (c < 0) {
            num += "-";
        }
        const auto mag = c < 0 ? -c : c;
        if (k == 0 || mag != 1) {
            num += std::to_string(mag);
        }
        if (k >= 1) {
            num += "z";
            if (k > 1) {
                num += "^" + std::to_string(k);
            }
        }
    }
    if (num.empty()) {
        num = "0";
    }
    return "(" + num + ") / (1 - z)^" + std::to_string(h.denom_power);
}

enum class pivot_strategy {
    most_frequent,  ///< variable occurring in the most minimal generators
    first_shared,   ///< lowest-index variable shared by two generators
};

namespace detail {

class hilbert_engine {
public:
    hilbert_engine(std::size_t nvars, pivot_strategy strategy) : nvars_(nvars), strategy_(strategy) {}

    /// Numerator of HS(T/M) over (1-z)^nvars.
    zpoly::coeffs numerator(std::vector<monomial> gens) {
        // Generators that are single variables split off as factors (1 - z).
        unsigned linear = 0;
        std::vector<monomial> rest;
        for (auto& g : gens) {
            if (g.is_one()) {
                return {};
            }
            if (g.degree() == 1) {
                ++linear;
            } else {
                rest.push_back(std::move(g));
            }
        }
        zpoly::coeffs factor = zpoly::power({1, -1}, linear);
        if (rest.empty()) {
            return factor;
        }
        auto pivot = choose_pivot(rest);
        if (!pivot) {
            zpoly::coeffs prod{1};
            for (const auto& g : rest) {
                zpoly::coeffs f(g.degree() + 1, 0);
                f[0] = 1;
                f[g.degree()] = -1;
                prod = zpoly::mul(prod, f);
            }
            return zpoly::mul(factor, prod);
        }
        const monomial p = monomial::variable(nvars_, *pivot);
        std::vector<monomial> with_p;
        std::vector<monomial> colon;
        with_p.reserve(rest.size() + 1);
        colon.reserve(rest.size());
        for (const auto& g : rest) {
            if (g[*pivot] == 0) {
                with_p.push_back(g);
            }
            colon.push_back(g[*pivot] > 0 ? g / p : g);
        }
        with_p.push_back(p);
        auto a = numerator(minimal(std::move(with_p)));
        auto b = zpoly::shift(numerator(minimal(std::move(colon))), 1);
        return zpoly::mul(factor, zpoly::add(a, b));
    }

    static std::vector<monomial> minimal(std::vector<monomial> gens) {
        std::sort(gens.begin(), gens.end(), monomial_ideal::canonical_less);
        std::vector<monomial> out;
        for (auto& g : gens) {
            if (std::none_of(out.begin(), out.end(), [&](const monomial& k) { return k.divides(g); })) {
                out.push_back(std::move(g));
            }
        }
        return out;
    }

private:
    /// nullopt when the generators are pairwise coprime.
    std::optional<std::size_t> choose_pivot(const std::vector<monomial>& gens) const {
        std::vector<unsigned> count(nvars_, 0);
        for (const auto& g : gens) {
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (g[v] != 0) {
                    ++count[v];
                }
            }
        }
        std::optional<std::size_t> best;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (count[v] < 2) {
                continue;
            }
            if (strategy_ == pivot_strategy::first_shared) {
                return v;
            }
            if (!best || count[v] > count[*best]) {
                best = v;
            }
        }
        return best;
    }

    std::size_t nvars_;
    pivot_strategy strategy_;
};

}  // namespace detail

/// Canonical Hilbert series of T / M.
inline hilbert_series hilbert_numerator(const monomial_ideal& M,
                                        pivot_strategy strategy = pivot_strategy::most_frequent) {
    const std::size_t n = M.ring()->size();
    detail::hilbert_engine engine(n, strategy);
    hilbert_series h{engine.numerator(M.generators()), n};
    return h.canonical();
}

}  // namespace cyclerees
