#pragma once

/**
 * @file monomial.hpp
 * @brief Dense exponent vectors with cached degree and support mask.
 */

#include "ring.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace cyclerees {

class monomial {
public:
    using exponent_type = std::uint16_t;
    using mask_type = std::uint32_t;
    static_assert(max_variables <= 32, "support mask is 32 bits wide");

    monomial() = default;

    /// The unit monomial in nvars variables.
    explicit monomial(std::size_t nvars) : nvars_(check_size(nvars)) {}

    monomial(std::size_t nvars, std::initializer_list<unsigned> exps) : nvars_(check_size(nvars)) {
        if (exps.size() != nvars) {
            throw std::invalid_argument("monomial: exponent count does not match variable count");
        }
        std::size_t i = 0;
        for (auto e : exps) {
            set(i++, e);
        }
    }

    /// x_var^e.
    static monomial variable(std::size_t nvars, std::size_t var, unsigned e = 1) {
        monomial m(nvars);
        m.set(var, e);
        return m;
    }

    [[nodiscard]] std::size_t size() const noexcept { return nvars_; }
    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] mask_type support() const noexcept { return support_; }
    [[nodiscard]] bool is_one() const noexcept { return degree_ == 0; }

    [[nodiscard]] unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }

    void set(std::size_t i, unsigned e) {
        if (i >= nvars_) {
            throw std::out_of_range("monomial: variable index out of range");
        }
        if (e > max_exponent) {
            throw std::overflow_error("monomial: exponent overflow");
        }
        degree_ = degree_ - exps_[i] + e;
        exps_[i] = static_cast<exponent_type>(e);
        if (e != 0) {
            support_ |= bit(i);
        } else {
            support_ &= ~bit(i);
        }
    }

    /// Degree restricted to a set of variables.
    template <class Range>
    [[nodiscard]] unsigned partial_degree(const Range& vars) const {
        unsigned d = 0;
        for (auto v : vars) {
            d += exps_[v];
        }
        return d;
    }

    [[nodiscard]] bool divides(const monomial& other) const noexcept {
        if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) {
            return false;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] > other.exps_[i]) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool coprime(const monomial& other) const noexcept { return (support_ & other.support_) == 0; }

    [[nodiscard]] bool is_squarefree() const noexcept {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exps_[i] > 1) {
                return false;
            }
        }
        return true;
    }

    friend monomial operator*(const monomial& a, const monomial& b) {
        check_compatible(a, b);
        monomial r(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            const unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
            if (e > max_exponent) {
                throw std::overflow_error("monomial: exponent overflow");
            }
            r.exps_[i] = static_cast<exponent_type>(e);
        }
        r.degree_ = a.degree_ + b.degree_;
        r.support_ = a.support_ | b.support_;
        return r;
    }

    /// a / b; requires b | a.
    friend monomial operator/(const monomial& a, const monomial& b) {
        check_compatible(a, b);
        if (!b.divides(a)) {
            throw std::domain_error("monomial: inexact division");
        }
        monomial r(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exps_[i] = static_cast<exponent_type>(a.exps_[i] - b.exps_[i]);
            if (r.exps_[i] != 0) {
                r.support_ |= bit(i);
            }
        }
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    friend monomial lcm(const monomial& a, const monomial& b) {
        check_compatible(a, b);
        monomial r(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i];
        }
        r.support_ = a.support_ | b.support_;
        return r;
    }

    friend monomial gcd(const monomial& a, const monomial& b) {
        check_compatible(a, b);
        monomial r(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i];
            if (r.exps_[i] != 0) {
                r.support_ |= bit(i);
            }
        }
        return r;
    }

    friend bool operator==(const monomial& a, const monomial& b) noexcept {
        return a.nvars_ == b.nvars_ && a.support_ == b.support_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    [[nodiscard]] std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (std::size_t i = 0; i < nvars_; ++i) {
            h = (h ^ exps_[i]) * 1099511628211ULL;
        }
        return h;
    }

    static constexpr unsigned max_exponent = 0xFFFF;

private:
    static constexpr mask_type bit(std::size_t i) noexcept { return mask_type{1} << i; }

    static std::uint8_t check_size(std::size_t n) {
        if (n > max_variables) {
            throw std::invalid_argument("monomial: too many variables");
        }
        return static_cast<std::uint8_t>(n);
    }

    static void check_compatible(const monomial& a, const monomial& b) {
        if (a.nvars_ != b.nvars_) {
            throw std::invalid_argument("monomial: variable count mismatch");
        }
    }

    std::array<exponent_type, max_variables> exps_{};
    std::uint32_t degree_ = 0;
    mask_type support_ = 0;
    std::uint8_t nvars_ = 0;
};

struct monomial_hash {
    std::size_t operator()(const monomial& m) const noexcept { return m.hash(); }
};

}  // namespace cyclerees
