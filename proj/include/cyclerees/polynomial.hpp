#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse polynomials with exact rational coefficients.
 *
 * A polynomial carries its ring and the monomial order its terms are sorted
 * by (descending). Results of arithmetic use the left operand's order.
 */

#include "monomial.hpp"
#include "order.hpp"
#include "rational.hpp"
#include "ring.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclerees {

struct term {
    rational coeff;
    monomial mono;

    friend bool operator==(const term&, const term&) = default;
};

class polynomial {
public:
    polynomial() = default;

    /// The zero polynomial.
    explicit polynomial(order_ptr order) : order_(std::move(order)) { check_order(); }

    polynomial(order_ptr order, std::vector<term> terms) : order_(std::move(order)), terms_(std::move(terms)) {
        check_order();
        for (const auto& t : terms_) {
            if (t.mono.size() != order_->size()) {
                throw std::invalid_argument("polynomial: term does not belong to the ring");
            }
        }
        normalize();
    }

    static polynomial constant(order_ptr order, rational c) {
        const std::size_t n = order->size();
        return polynomial(std::move(order), {{std::move(c), monomial(n)}});
    }

    static polynomial from_monomial(order_ptr order, monomial m, rational c = 1) {
        return polynomial(std::move(order), {{std::move(c), std::move(m)}});
    }

    static polynomial variable(order_ptr order, std::size_t var) {
        const std::size_t n = order->size();
        return from_monomial(std::move(order), monomial::variable(n, var));
    }

    [[nodiscard]] const ring_ptr& ring() const {
        if (!order_) {
            throw std::logic_error("polynomial: no ring attached");
        }
        return order_->ring();
    }
    [[nodiscard]] const order_ptr& order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<term>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    [[nodiscard]] const term& leading_term() const {
        if (terms_.empty()) {
            throw std::domain_error("polynomial: zero polynomial has no leading term");
        }
        return terms_.front();
    }
    [[nodiscard]] const monomial& leading_monomial() const { return leading_term().mono; }
    [[nodiscard]] const rational& leading_coefficient() const { return leading_term().coeff; }

    /// Maximal total degree over terms (0 for the zero polynomial).
    [[nodiscard]] unsigned degree() const noexcept {
        unsigned d = 0;
        for (const auto& t : terms_) {
            d = std::max(d, t.mono.degree());
        }
        return d;
    }

    [[nodiscard]] bool is_homogeneous() const noexcept {
        for (const auto& t : terms_) {
            if (t.mono.degree() != terms_.front().mono.degree()) {
                return false;
            }
        }
        return true;
    }

    /// Homogeneous with respect to the degree in each of the given variable sets.
    [[nodiscard]] bool is_homogeneous_in(const std::vector<std::size_t>& vars) const {
        for (const auto& t : terms_) {
            if (t.mono.partial_degree(vars) != terms_.front().mono.partial_degree(vars)) {
                return false;
            }
        }
        return true;
    }

    /// Same polynomial with terms re-sorted under another order on the same ring.
    [[nodiscard]] polynomial with_order(order_ptr order) const {
        if (!same_ring(order->ring(), ring())) {
            throw std::invalid_argument("polynomial: order belongs to a different ring");
        }
        if (order == order_ || *order == *order_) {
            polynomial p = *this;
            p.order_ = std::move(order);
            return p;
        }
        polynomial p;
        p.order_ = std::move(order);
        p.terms_ = terms_;
        p.sort_terms();
        return p;
    }

    /// Scales so the leading coefficient is 1.
    [[nodiscard]] polynomial monic() const {
        if (is_zero() || leading_coefficient().is_one()) {
            return *this;
        }
        const rational inv = rational(1) / leading_coefficient();
        polynomial p = *this;
        for (auto& t : p.terms_) {
            t.coeff *= inv;
        }
        return p;
    }

    /// Sorts, merges duplicate monomials and drops zeros. Idempotent.
    [[nodiscard]] polynomial normalized() const {
        polynomial p = *this;
        p.normalize();
        return p;
    }

    [[nodiscard]] polynomial mul_term(const rational& c, const monomial& m) const {
        polynomial p(order_);
        if (c.is_zero()) {
            return p;
        }
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            p.terms_.push_back({t.coeff * c, t.mono * m});
        }
        return p;
    }

    /// f - c * m * g, computed by a single merge (all in f's order).
    static polynomial sub_mul(const polynomial& f, const rational& c, const monomial& m, const polynomial& g) {
        if (c.is_zero() || g.is_zero()) {
            return f;
        }
        polynomial r(f.order_);
        r.terms_.reserve(f.terms_.size() + g.terms_.size());
        const auto& ord = *f.order_;
        const bool same = g.order_ == f.order_ || *g.order_ == *f.order_;
        const polynomial* gp = &g;
        polynomial resorted;
        if (!same) {
            resorted = g.with_order(f.order_);
            gp = &resorted;
        }
        auto i = f.terms_.begin();
        auto j = gp->terms_.begin();
        monomial mj;
        bool have_mj = false;
        while (i != f.terms_.end() || j != gp->terms_.end()) {
            if (j != gp->terms_.end() && !have_mj) {
                mj = j->mono * m;
                have_mj = true;
            }
            if (j == gp->terms_.end()) {
                r.terms_.push_back(*i++);
                continue;
            }
            if (i == f.terms_.end()) {
                r.terms_.push_back({-(j->coeff * c), mj});
                ++j;
                have_mj = false;
                continue;
            }
            const auto cmp = ord.compare_unchecked(i->mono, mj);
            if (cmp > 0) {
                r.terms_.push_back(*i++);
            } else if (cmp < 0) {
                r.terms_.push_back({-(j->coeff * c), mj});
                ++j;
                have_mj = false;
            } else {
                rational sum = i->coeff - j->coeff * c;
                if (!sum.is_zero()) {
                    r.terms_.push_back({std::move(sum), mj});
                }
                ++i;
                ++j;
                have_mj = false;
            }
        }
        return r;
    }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        check_same_ring(a, b);
        return sub_mul(a, rational(-1), monomial(a.order_->size()), b);
    }

    friend polynomial operator-(const polynomial& a, const polynomial& b) {
        check_same_ring(a, b);
        return sub_mul(a, rational(1), monomial(a.order_->size()), b);
    }

    friend polynomial operator-(const polynomial& a) {
        polynomial p = a;
        for (auto& t : p.terms_) {
            t.coeff = -t.coeff;
        }
        return p;
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        check_same_ring(a, b);
        polynomial r(a.order_);
        for (const auto& t : b.terms_) {
            r = sub_mul(r, -t.coeff, t.mono, a);
        }
        return r;
    }

    friend polynomial operator*(const rational& c, const polynomial& p) {
        return p.mul_term(c, monomial(p.order_->size()));
    }

    polynomial& operator+=(const polynomial& o) { return *this = *this + o; }
    polynomial& operator-=(const polynomial& o) { return *this = *this - o; }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    /// Equal as ring elements (orders may differ).
    friend bool operator==(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return a.is_zero() && b.is_zero();
        }
        if (!same_ring(a.ring(), b.ring())) {
            return false;
        }
        if (*a.order_ == *b.order_) {
            return a.terms_ == b.terms_;
        }
        return a.terms_ == b.with_order(a.order_).terms_;
    }

private:
    void check_order() const {
        if (!order_) {
            throw std::invalid_argument("polynomial: null order");
        }
    }

    static void check_same_ring(const polynomial& a, const polynomial& b) {
        if (!a.order_ || !b.order_ || !same_ring(a.ring(), b.ring())) {
            throw std::invalid_argument("polynomial: ring mismatch");
        }
    }

    void sort_terms() {
        const auto& ord = *order_;
        std::sort(terms_.begin(), terms_.end(),
                  [&](const term& a, const term& b) { return ord.compare_unchecked(a.mono, b.mono) > 0; });
    }

    void normalize() {
        sort_terms();
        std::vector<term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
            } else {
                out.push_back(std::move(t));
            }
        }
        std::erase_if(out, [](const term& t) { return t.coeff.is_zero(); });
        terms_ = std::move(out);
    }

    order_ptr order_;
    std::vector<term> terms_;
};

/// Maximal term of p under `order` (which may differ from p's own order).
inline term leading_term(const monomial_order& order, const polynomial& p) {
    if (p.is_zero()) {
        throw std::domain_error("leading_term: zero polynomial");
    }
    if (!same_ring(order.ring(), p.ring())) {
        throw std::invalid_argument("leading_term: ring mismatch");
    }
    if (*p.order() == order) {
        return p.leading_term();
    }
    const term* best = &p.terms().front();
    for (const auto& t : p.terms()) {
        if (order.compare_unchecked(t.mono, best->mono) > 0) {
            best = &t;
        }
    }
    return *best;
}

inline polynomial poly_add(const polynomial& p, const polynomial& q) { return p + q; }
inline polynomial poly_mul(const polynomial& p, const polynomial& q) { return p * q; }
inline polynomial poly_neg(const polynomial& p) { return -p; }

}  // namespace cyclerees
