#pragma once

/**
 * @file order.hpp
 * @brief Block monomial orders built from staged comparisons.
 *
 * An order is a list of stages compared lexicographically. Each stage looks
 * at one block of variables (listed from highest to lowest priority) with a
 * base rule:
 *   - lex:       compare exponents in priority order;
 *   - degrevlex: compare block degree, then the last differing variable
 *                (smaller exponent wins);
 *   - degree:    compare block degree only (elimination stage).
 * Every variable must be totally ordered by some lex/degrevlex stage, or be
 * the only variable of a degree stage.
 */

#include "monomial.hpp"
#include "ring.hpp"

#include <compare>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclerees {

enum class base_order { lex, degrevlex, degree };

struct order_stage {
    base_order kind;
    std::vector<std::size_t> vars;  // highest priority first
};

class monomial_order {
public:
    monomial_order(ring_ptr ring, std::vector<order_stage> stages) : ring_(std::move(ring)), stages_(std::move(stages)) {
        validate();
        describe();
    }

    [[nodiscard]] const ring_ptr& ring() const noexcept { return ring_; }
    [[nodiscard]] std::size_t size() const noexcept { return ring_->size(); }
    [[nodiscard]] const std::vector<order_stage>& stages() const noexcept { return stages_; }

    /// Stable textual descriptor; equal descriptors on equal rings mean equal orders.
    [[nodiscard]] const std::string& descriptor() const noexcept { return descriptor_; }

    [[nodiscard]] std::strong_ordering compare(const monomial& a, const monomial& b) const {
        if (a.size() != size() || b.size() != size()) {
            throw std::invalid_argument("monomial_order: monomial does not belong to the order's ring");
        }
        return compare_unchecked(a, b);
    }

    [[nodiscard]] std::strong_ordering compare_unchecked(const monomial& a, const monomial& b) const noexcept {
        for (const auto& st : stages_) {
            switch (st.kind) {
                case base_order::lex:
                    for (auto v : st.vars) {
                        if (a[v] != b[v]) {
                            return a[v] <=> b[v];
                        }
                    }
                    break;
                case base_order::degrevlex: {
                    const unsigned da = a.partial_degree(st.vars);
                    const unsigned db = b.partial_degree(st.vars);
                    if (da != db) {
                        return da <=> db;
                    }
                    for (auto it = st.vars.rbegin(); it != st.vars.rend(); ++it) {
                        if (a[*it] != b[*it]) {
                            return b[*it] <=> a[*it];
                        }
                    }
                    break;
                }
                case base_order::degree: {
                    const unsigned da = a.partial_degree(st.vars);
                    const unsigned db = b.partial_degree(st.vars);
                    if (da != db) {
                        return da <=> db;
                    }
                    break;
                }
            }
        }
        return std::strong_ordering::equal;
    }

    [[nodiscard]] bool less(const monomial& a, const monomial& b) const noexcept { return compare_unchecked(a, b) < 0; }

    friend bool operator==(const monomial_order& a, const monomial_order& b) {
        return same_ring(a.ring_, b.ring_) && a.descriptor_ == b.descriptor_;
    }

private:
    void validate() const {
        const std::size_t n = ring_->size();
        std::vector<int> seen(n, 0);
        for (const auto& st : stages_) {
            std::vector<bool> in_stage(n, false);
            for (auto v : st.vars) {
                if (v >= n) {
                    throw std::invalid_argument("monomial_order: variable index out of range");
                }
                if (in_stage[v]) {
                    throw std::invalid_argument("monomial_order: variable repeated within a stage");
                }
                in_stage[v] = true;
                if (st.kind != base_order::degree || st.vars.size() == 1) {
                    seen[v] = 1;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v] == 0) {
                throw std::invalid_argument("monomial_order: variable '" + ring_->name(v) +
                                            "' is not totally ordered by any stage");
            }
        }
    }

    void describe() {
        std::ostringstream os;
        for (std::size_t i = 0; i < stages_.size(); ++i) {
            if (i != 0) {
                os << ';';
            }
            const auto& st = stages_[i];
            os << (st.kind == base_order::lex ? "lex" : st.kind == base_order::degrevlex ? "drl" : "deg") << '(';
            for (std::size_t j = 0; j < st.vars.size(); ++j) {
                os << (j != 0 ? "," : "") << ring_->name(st.vars[j]);
            }
            os << ')';
        }
        descriptor_ = os.str();
    }

    ring_ptr ring_;
    std::vector<order_stage> stages_;
    std::string descriptor_;
};

using order_ptr = std::shared_ptr<const monomial_order>;

/// Three-way comparison of two monomials under an order.
inline std::strong_ordering monomial_cmp(const monomial_order& order, const monomial& a, const monomial& b) {
    return order.compare(a, b);
}

/// Single-stage order over all variables in declaration order.
inline order_ptr make_simple_order(ring_ptr ring, base_order kind) {
    std::vector<std::size_t> vars(ring->size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        vars[i] = i;
    }
    return std::make_shared<const monomial_order>(std::move(ring), std::vector<order_stage>{{kind, std::move(vars)}});
}

/**
 * Product order used throughout: degrevlex on the Y block with
 * y1 > y2 > ... > y_{n-1} > y0, ties broken by lex on X with
 * x1 > ... > x_{n-1} > x0. Other blocks (e.g. S) follow, each by lex.
 */
inline order_ptr make_product_order(ring_ptr ring) {
    std::vector<order_stage> stages;
    for (const auto& blk : ring->blocks()) {
        auto vars = ring->block_indices(blk.name);
        stages.push_back({blk.name == "Y" ? base_order::degrevlex : base_order::lex, std::move(vars)});
    }
    return std::make_shared<const monomial_order>(std::move(ring), std::move(stages));
}

/// Elimination order for `drop`: compares the degree in `drop` first, then `base`.
inline order_ptr make_elimination_order(const monomial_order& base, const std::vector<std::size_t>& drop) {
    std::vector<order_stage> stages;
    stages.push_back({base_order::degree, drop});
    for (const auto& st : base.stages()) {
        stages.push_back(st);
    }
    return std::make_shared<const monomial_order>(base.ring(), std::move(stages));
}

/**
 * Restriction of `order` to a subring: stages are remapped through `map`,
 * variables without an image are removed and empty stages dropped.
 */
inline order_ptr restrict_order(const monomial_order& order, ring_ptr sub,
                                const std::vector<std::optional<std::size_t>>& map) {
    std::vector<order_stage> stages;
    for (const auto& st : order.stages()) {
        order_stage ns{st.kind, {}};
        for (auto v : st.vars) {
            if (map.at(v)) {
                ns.vars.push_back(*map[v]);
            }
        }
        if (!ns.vars.empty()) {
            stages.push_back(std::move(ns));
        }
    }
    return std::make_shared<const monomial_order>(std::move(sub), std::move(stages));
}

}  // namespace cyclerees
