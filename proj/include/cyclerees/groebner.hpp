#pragma once

/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm, normal forms, ideal membership and elimination.
 *
 * Pairs are managed with the Gebauer-Moeller update, which applies the
 * coprime-leading-monomial criterion and the chain criterion. Pair selection
 * follows the normal strategy (smallest lcm degree) with FIFO tie-breaks, so
 * every run, and every certificate, is reproducible.
 */

#include "polynomial.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclerees {

/// Thrown when a computation runs past its step or time allowance.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct budget {
    using clock = std::chrono::steady_clock;

    std::optional<clock::time_point> deadline;
    std::optional<std::uint64_t> max_steps;

    static budget unlimited() { return {}; }

    static budget seconds(double secs) {
        budget b;
        b.deadline = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(secs));
        return b;
    }

    [[nodiscard]] bool expired() const { return deadline && clock::now() > *deadline; }
};

namespace detail {

class budget_meter {
public:
    explicit budget_meter(const budget& b) : budget_(b) {}

    void tick() {
        ++steps_;
        if (budget_.max_steps && steps_ > *budget_.max_steps) {
            throw budget_exceeded("step budget exceeded");
        }
        if ((steps_ & 0xFF) == 0 && budget_.expired()) {
            throw budget_exceeded("time budget exceeded");
        }
    }

    void check_clock() const {
        if (budget_.expired()) {
            throw budget_exceeded("time budget exceeded");
        }
    }

    [[nodiscard]] std::uint64_t steps() const noexcept { return steps_; }

private:
    const budget& budget_;
    std::uint64_t steps_ = 0;
};

inline std::vector<polynomial> in_order(std::span<const polynomial> polys, const order_ptr& order) {
    std::vector<polynomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        if (!p.order()) {
            continue;
        }
        out.push_back(p.with_order(order));
    }
    return out;
}

/// Full reduction of f by the divisors listed in `use` (indices into basis).
inline polynomial reduce(polynomial f, const std::vector<polynomial>& basis, const std::vector<std::size_t>& use,
                         budget_meter* meter) {
    std::vector<term> rem;
    while (!f.is_zero()) {
        const term& lt = f.leading_term();
        const polynomial* div = nullptr;
        for (auto k : use) {
            if (basis[k].leading_monomial().divides(lt.mono)) {
                div = &basis[k];
                break;
            }
        }
        if (div != nullptr) {
            if (meter != nullptr) {
                meter->tick();
            }
            f = polynomial::sub_mul(f, lt.coeff / div->leading_coefficient(), lt.mono / div->leading_monomial(), *div);
        } else {
            rem.push_back(lt);
            std::vector<term> rest(f.terms().begin() + 1, f.terms().end());
            f = polynomial(f.order(), std::move(rest));
        }
    }
    return polynomial(f.order(), std::move(rem));
}

inline std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = i;
    }
    return v;
}

}  // namespace detail

/**
 * Remainder of f on division by G under `order`: at each step the largest
 * reducible term is reduced by the first element of G (list order) whose
 * leading monomial divides it. No term of the result is divisible by a
 * leading monomial of G.
 */
inline polynomial normal_form(const polynomial& f, std::span<const polynomial> G, const order_ptr& order) {
    auto basis = detail::in_order(G, order);
    std::erase_if(basis, [](const polynomial& g) { return g.is_zero(); });
    if (f.is_zero()) {
        return polynomial(order);
    }
    return detail::reduce(f.with_order(order), basis, detail::iota(basis.size()), nullptr);
}

/// S-polynomial with both leading terms scaled to 1.
inline polynomial s_polynomial(const polynomial& f, const polynomial& g) {
    const monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    const polynomial a = f.mul_term(rational(1) / f.leading_coefficient(), l / f.leading_monomial());
    return polynomial::sub_mul(a, rational(1) / g.leading_coefficient(), l / g.leading_monomial(), g);
}

struct gb_stats {
    std::uint64_t pairs_created = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t coprime_pruned = 0;
    std::uint64_t chain_pruned = 0;
    std::uint64_t reduction_steps = 0;
};

struct gb_options {
    budget limits;
    /// Skip pairs whose lcm has total degree above this bound. For homogeneous
    /// input the result is then a Groebner basis up to that degree.
    std::optional<unsigned> degree_bound;
};

struct groebner_basis {
    order_ptr order;
    std::vector<polynomial> elements;  ///< reduced, monic, ascending by leading monomial
    std::optional<unsigned> degree_bound;  ///< set iff pairs above the bound were skipped
    gb_stats stats;

    [[nodiscard]] bool complete() const noexcept { return !degree_bound.has_value(); }

    [[nodiscard]] std::vector<monomial> leading_monomials() const {
        std::vector<monomial> out;
        out.reserve(elements.size());
        for (const auto& g : elements) {
            out.push_back(g.leading_monomial());
        }
        return out;
    }
};

namespace detail {

class buchberger_engine {
public:
    buchberger_engine(order_ptr order, const gb_options& opts) : order_(std::move(order)), opts_(opts), meter_(opts_.limits) {}

    groebner_basis run(std::span<const polynomial> gens) {
        auto input = in_order(gens, order_);
        std::erase_if(input, [](const polynomial& p) { return p.is_zero(); });
        // Low-degree generators first keeps early reductions cheap.
        std::stable_sort(input.begin(), input.end(), [&](const polynomial& a, const polynomial& b) {
            if (a.leading_monomial().degree() != b.leading_monomial().degree()) {
                return a.leading_monomial().degree() < b.leading_monomial().degree();
            }
            return order_->less(a.leading_monomial(), b.leading_monomial());
        });
        for (const auto& f : input) {
            polynomial r = detail::reduce(f, basis_, active_list(), &meter_);
            if (!r.is_zero()) {
                insert(r.monic());
            }
        }
        while (!pairs_.empty()) {
            meter_.check_clock();
            auto it = pairs_.begin();
            const spair p = it->second;
            pairs_.erase(it);
            ++stats_.pairs_reduced;
            polynomial s = s_polynomial(basis_[p.i], basis_[p.j]);
            polynomial r = detail::reduce(std::move(s), basis_, active_list(), &meter_);
            if (r.is_zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            insert(r.monic());
        }
        return finish();
    }

private:
    struct spair {
        std::size_t i;
        std::size_t j;
        monomial lcm;
    };
    using pair_key = std::pair<unsigned, std::uint64_t>;  // (lcm degree, sequence)

    std::vector<std::size_t> active_list() const {
        std::vector<std::size_t> out;
        out.reserve(basis_.size());
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (active_[k]) {
                out.push_back(k);
            }
        }
        return out;
    }

    void insert(polynomial h) {
        const std::size_t k = basis_.size();
        const monomial lm_h = h.leading_monomial();
        basis_.push_back(std::move(h));
        active_.push_back(true);

        // Gebauer-Moeller: candidate pairs (g, h) for every active g.
        struct candidate {
            std::size_t i;
            monomial lcm;
            bool coprime;
        };
        std::vector<candidate> cands;
        for (std::size_t i = 0; i < k; ++i) {
            if (active_[i]) {
                const monomial& lm_i = basis_[i].leading_monomial();
                cands.push_back({i, lcm(lm_i, lm_h), lm_i.coprime(lm_h)});
            }
        }
        stats_.pairs_created += cands.size();

        // Keep (g1,h) if coprime, or if no other candidate's lcm divides its lcm.
        // Among equal lcms only the last one survives, and none survives if a
        // coprime candidate shares that lcm.
        std::vector<bool> in_d(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            bool keep = cands[a].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t b = 0; b < cands.size(); ++b) {
                    if (b == a) {
                        continue;
                    }
                    // C contains the undecided candidates after a; D the kept ones before it.
                    const bool in_c = b > a;
                    if ((in_c || in_d[b]) && cands[b].lcm.divides(cands[a].lcm)) {
                        keep = false;
                        break;
                    }
                }
            }
            in_d[a] = keep;
            if (!keep) {
                ++stats_.chain_pruned;
            }
        }

        // Prune old pairs by the chain criterion.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const spair& p = it->second;
            if (lm_h.divides(p.lcm) && lcm(basis_[p.i].leading_monomial(), lm_h) != p.lcm &&
                lcm(basis_[p.j].leading_monomial(), lm_h) != p.lcm) {
                ++stats_.chain_pruned;
                it = pairs_.erase(it);
            } else {
                ++it;
            }
        }

        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!in_d[a]) {
                continue;
            }
            if (cands[a].coprime) {
                ++stats_.coprime_pruned;
                continue;
            }
            if (opts_.degree_bound && cands[a].lcm.degree() > *opts_.degree_bound) {
                truncated_ = true;
                continue;
            }
            pairs_.emplace(pair_key{cands[a].lcm.degree(), seq_++}, spair{cands[a].i, k, cands[a].lcm});
        }

        for (std::size_t i = 0; i < k; ++i) {
            if (active_[i] && lm_h.divides(basis_[i].leading_monomial())) {
                active_[i] = false;
            }
        }
    }

    groebner_basis finish() {
        std::vector<polynomial> minimal;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (active_[k]) {
                minimal.push_back(basis_[k]);
            }
        }
        std::vector<polynomial> reduced;
        reduced.reserve(minimal.size());
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            std::vector<std::size_t> others;
            for (std::size_t b = 0; b < minimal.size(); ++b) {
                if (b != a) {
                    others.push_back(b);
                }
            }
            const term lt = minimal[a].leading_term();
            std::vector<term> tail(minimal[a].terms().begin() + 1, minimal[a].terms().end());
            polynomial t = detail::reduce(polynomial(order_, std::move(tail)), minimal, others, &meter_);
            reduced.push_back((polynomial::from_monomial(order_, lt.mono, lt.coeff) + t).monic());
        }
        std::sort(reduced.begin(), reduced.end(), [&](const polynomial& a, const polynomial& b) {
            return order_->less(a.leading_monomial(), b.leading_monomial());
        });
        stats_.reduction_steps = meter_.steps();
        groebner_basis gb{order_, std::move(reduced), std::nullopt, stats_};
        if (truncated_) {
            gb.degree_bound = opts_.degree_bound;
        }
        return gb;
    }

    order_ptr order_;
    gb_options opts_;
    budget_meter meter_;
    std::vector<polynomial> basis_;
    std::vector<bool> active_;
    std::map<pair_key, spair> pairs_;
    std::uint64_t seq_ = 0;
    bool truncated_ = false;
    gb_stats stats_;
};

}  // namespace detail

/// Reduced Groebner basis of (gens) under `order`.
inline groebner_basis buchberger(std::span<const polynomial> gens, order_ptr order, const gb_options& opts = {}) {
    return detail::buchberger_engine(std::move(order), opts).run(gens);
}

struct gb_certificate {
    bool is_groebner = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  ///< indices into the checked list
    polynomial remainder;                                             ///< nonzero remainder when failing
};

/**
 * Checks Buchberger's criterion directly: every S-polynomial of every pair
 * must reduce to zero. On failure reports the first offending pair (in
 * (i, j) lexicographic order) and its remainder.
 */
inline gb_certificate is_groebner_basis(std::span<const polynomial> G, const order_ptr& order) {
    auto basis = detail::in_order(G, order);
    for (const auto& g : basis) {
        if (g.is_zero()) {
            throw std::invalid_argument("is_groebner_basis: zero element");
        }
    }
    const auto all = detail::iota(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            polynomial r = detail::reduce(s_polynomial(basis[i], basis[j]), basis, all, nullptr);
            if (!r.is_zero()) {
                return {false, std::pair{i, j}, std::move(r)};
            }
        }
    }
    return {true, std::nullopt, polynomial(order)};
}

/**
 * An ideal given by generators, with a per-order cache of reduced Groebner
 * bases. The cache is filled under a lock, once per order.
 */
class ideal {
public:
    ideal(ring_ptr ring, std::vector<polynomial> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) {
            if (!g.order()) {
                continue;
            }
            if (!same_ring(g.ring(), ring_)) {
                throw std::invalid_argument("ideal: generator from a different ring");
            }
            if (!g.is_zero()) {
                gens_.push_back(std::move(g));
            }
        }
    }

    ideal(const ideal& o) : ring_(o.ring_), gens_(o.gens_) {
        std::lock_guard lock(o.mu_);
        cache_ = o.cache_;
    }
    ideal& operator=(const ideal& o) {
        if (this != &o) {
            std::scoped_lock lock(mu_, o.mu_);
            ring_ = o.ring_;
            gens_ = o.gens_;
            cache_ = o.cache_;
        }
        return *this;
    }
    ideal(ideal&& o) noexcept : ring_(std::move(o.ring_)), gens_(std::move(o.gens_)), cache_(std::move(o.cache_)) {}
    ideal& operator=(ideal&& o) noexcept {
        ring_ = std::move(o.ring_);
        gens_ = std::move(o.gens_);
        cache_ = std::move(o.cache_);
        return *this;
    }
    ~ideal() = default;

    [[nodiscard]] const ring_ptr& ring() const noexcept { return ring_; }
    [[nodiscard]] const std::vector<polynomial>& generators() const noexcept { return gens_; }
    [[nodiscard]] bool is_zero() const noexcept { return gens_.empty(); }

    [[nodiscard]] bool is_homogeneous() const {
        for (const auto& g : gens_) {
            if (!g.is_homogeneous()) {
                return false;
            }
        }
        return true;
    }

    /// Reduced Groebner basis under `order`, computed once and cached.
    /// With a degree bound, a cached complete basis is reused when present.
    [[nodiscard]] std::shared_ptr<const groebner_basis> groebner(const order_ptr& order, const gb_options& opts = {}) const {
        if (!same_ring(order->ring(), ring_)) {
            throw std::invalid_argument("ideal: order belongs to a different ring");
        }
        std::lock_guard lock(mu_);
        const std::string full_key = order->descriptor();
        if (auto it = cache_.find(full_key); it != cache_.end()) {
            return it->second;
        }
        std::string key = full_key;
        if (opts.degree_bound) {
            key += "|deg<=" + std::to_string(*opts.degree_bound);
            if (auto it = cache_.find(key); it != cache_.end()) {
                return it->second;
            }
        }
        auto gb = std::make_shared<const groebner_basis>(buchberger(gens_, order, opts));
        cache_[gb->complete() ? full_key : key] = gb;
        return gb;
    }

    /// Installs a basis computed elsewhere (e.g. by elimination).
    void seed_groebner(groebner_basis gb) const {
        std::lock_guard lock(mu_);
        const std::string key = gb.order->descriptor();
        cache_[key] = std::make_shared<const groebner_basis>(std::move(gb));
    }

private:
    ring_ptr ring_;
    std::vector<polynomial> gens_;
    mutable std::mutex mu_;
    mutable std::map<std::string, std::shared_ptr<const groebner_basis>> cache_;
};

/**
 * Index of the first element of `elems` not in I, or nullopt if all lie in
 * I. For homogeneous I and elements, only a Groebner basis up to the largest
 * element degree is computed.
 */
inline std::optional<std::size_t> first_non_member(const ideal& I, std::span<const polynomial> elems,
                                                   const order_ptr& order, const budget& limits = {}) {
    bool homogeneous = I.is_homogeneous();
    unsigned top = 0;
    std::optional<std::size_t> first_nonzero;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto& f = elems[i];
        if (f.is_zero()) {
            continue;
        }
        if (!first_nonzero) {
            first_nonzero = i;
        }
        homogeneous = homogeneous && f.is_homogeneous();
        top = std::max(top, f.degree());
    }
    if (!first_nonzero) {
        return std::nullopt;
    }
    if (I.is_zero()) {
        return first_nonzero;
    }
    gb_options opts{limits, std::nullopt};
    if (homogeneous) {
        opts.degree_bound = top;
    }
    const auto gb = I.groebner(order, opts);
    const auto all = detail::iota(gb->elements.size());
    detail::budget_meter meter(limits);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto& f = elems[i];
        if (f.is_zero()) {
            continue;
        }
        if (!detail::reduce(f.with_order(order), gb->elements, all, &meter).is_zero()) {
            return i;
        }
    }
    return std::nullopt;
}

/// True iff every element of `elems` lies in I.
inline bool contains_all(const ideal& I, std::span<const polynomial> elems, const order_ptr& order,
                         const budget& limits = {}) {
    return !first_non_member(I, elems, order, limits).has_value();
}

inline bool ideal_membership(const polynomial& f, const ideal& I, const order_ptr& order, const budget& limits = {}) {
    return contains_all(I, std::span<const polynomial>(&f, 1), order, limits);
}

/// Mutual inclusion of generator lists.
inline bool ideal_equal(const ideal& a, const ideal& b, const order_ptr& order, const budget& limits = {}) {
    if (!same_ring(a.ring(), b.ring())) {
        throw std::invalid_argument("ideal_equal: ring mismatch");
    }
    return contains_all(a, b.generators(), order, limits) && contains_all(b, a.generators(), order, limits);
}

/// Sum of two ideals in the same ring.
inline ideal ideal_sum(const ideal& a, const ideal& b) {
    if (!same_ring(a.ring(), b.ring())) {
        throw std::invalid_argument("ideal_sum: ring mismatch");
    }
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return ideal(a.ring(), std::move(gens));
}

/// Image of p in a subring; throws if p involves a dropped variable.
inline polynomial map_to_subring(const polynomial& p, const order_ptr& sub_order,
                                 const std::vector<std::optional<std::size_t>>& map) {
    std::vector<term> terms;
    terms.reserve(p.size());
    const std::size_t n = sub_order->size();
    for (const auto& t : p.terms()) {
        monomial m(n);
        for (std::size_t v = 0; v < map.size(); ++v) {
            if (t.mono[v] == 0) {
                continue;
            }
            if (!map[v]) {
                throw std::invalid_argument("map_to_subring: polynomial involves an eliminated variable");
            }
            m.set(*map[v], t.mono[v]);
        }
        terms.push_back({t.coeff, m});
    }
    return polynomial(sub_order, std::move(terms));
}

/// Image of p in a larger ring (`map` sends each variable of p's ring to a variable of the target).
inline polynomial map_to_ring(const polynomial& p, const order_ptr& target, const std::vector<std::size_t>& map) {
    std::vector<term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        monomial m(target->size());
        for (std::size_t v = 0; v < map.size(); ++v) {
            if (t.mono[v] != 0) {
                m.set(map[v], t.mono[v]);
            }
        }
        terms.push_back({t.coeff, m});
    }
    return polynomial(target, std::move(terms));
}

struct elimination_result {
    ideal result;                                   ///< I intersected with K[kept variables]
    order_ptr order;                                ///< order on the subring, restricted from the elimination order
    std::vector<std::optional<std::size_t>> index;  ///< old -> new variable index
};

/**
 * Eliminates the variables in `drop`: computes a Groebner basis of I for an
 * elimination order (degree in `drop` first, then `base`) and keeps the
 * elements free of dropped variables. Those elements are a reduced Groebner
 * basis of the elimination ideal for the restricted order, which is seeded
 * into the result's cache.
 */
inline elimination_result eliminate(const ideal& I, const std::vector<std::size_t>& drop, const monomial_order& base,
                                    const budget& limits = {}) {
    if (!same_ring(base.ring(), I.ring())) {
        throw std::invalid_argument("eliminate: order/ring mismatch");
    }
    std::vector<bool> keep(I.ring()->size(), true);
    for (auto v : drop) {
        if (v >= keep.size()) {
            throw std::invalid_argument("eliminate: variable index out of range");
        }
        keep[v] = false;
    }
    auto [sub, map] = I.ring()->subring(keep);
    if (drop.empty()) {
        auto sub_order = restrict_order(base, sub, map);
        std::vector<polynomial> gens;
        for (const auto& g : I.generators()) {
            gens.push_back(map_to_subring(g, sub_order, map));
        }
        return {ideal(sub, std::move(gens)), sub_order, map};
    }
    const order_ptr elim = make_elimination_order(base, drop);
    const auto gb = I.groebner(elim, gb_options{limits, std::nullopt});
    const order_ptr sub_order = restrict_order(*elim, sub, map);
    std::vector<polynomial> kept;
    for (const auto& g : gb->elements) {
        bool free = true;
        for (auto v : drop) {
            if (g.leading_monomial()[v] != 0) {
                free = false;
                break;
            }
        }
        if (free) {
            kept.push_back(map_to_subring(g, sub_order, map));
        }
    }
    ideal result(sub, kept);
    result.seed_groebner(groebner_basis{sub_order, kept, std::nullopt, gb->stats});
    return {std::move(result), sub_order, map};
}

}  // namespace cyclerees
