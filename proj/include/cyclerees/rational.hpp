#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers with a machine-word fast path.
 *
 * Values whose numerator and denominator fit in int64 are stored inline.
 * Anything larger is promoted to a GMP rational and demoted again as soon
 * as it fits. Almost every coefficient met in binomial ideals is +-1, so
 * the inline path carries nearly all of the work.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclerees {

class rational {
public:
    rational() noexcept = default;
    rational(std::int64_t v) noexcept : num_(v) {}  // NOLINT(google-explicit-constructor)
    rational(int v) noexcept : num_(v) {}           // NOLINT(google-explicit-constructor)

    rational(std::int64_t num, std::int64_t den) {
        if (den == 0) {
            throw std::domain_error("rational: zero denominator");
        }
        assign_reduced(static_cast<i128>(num), static_cast<i128>(den));
    }

    explicit rational(const mpq_class& q) { assign_big(mpq_class(q)); }

    /// Parses "p" or "p/q" with an optional leading sign.
    static rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) {
            throw std::invalid_argument("rational: empty literal");
        }
        mpq_class q;
        if (q.set_str(s, 10) != 0) {
            throw std::invalid_argument("rational: bad literal '" + s + "'");
        }
        if (q.get_den() == 0) {
            throw std::domain_error("rational: zero denominator");
        }
        q.canonicalize();
        return rational(q);
    }

    rational(const rational& other) : num_(other.num_), den_(other.den_) {
        if (other.big_) {
            big_ = std::make_unique<mpq_class>(*other.big_);
        }
    }
    rational(rational&&) noexcept = default;
    rational& operator=(const rational& other) {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
        }
        return *this;
    }
    rational& operator=(rational&&) noexcept = default;
    ~rational() = default;

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    [[nodiscard]] bool is_small() const noexcept { return !big_; }

    [[nodiscard]] int sign() const noexcept {
        if (big_) {
            return sgn(*big_);
        }
        return (num_ > 0) - (num_ < 0);
    }

    [[nodiscard]] mpq_class to_mpq() const {
        if (big_) {
            return *big_;
        }
        mpq_class q(mpz_from(num_), mpz_from(den_));
        return q;
    }

    [[nodiscard]] std::string to_string() const {
        if (big_) {
            return big_->get_str(10);
        }
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Integer value; throws unless the number is an integer fitting int64.
    [[nodiscard]] std::int64_t to_int64() const {
        if (big_ || den_ != 1) {
            throw std::range_error("rational: not a machine integer: " + to_string());
        }
        return num_;
    }

    friend rational operator-(const rational& a) {
        if (a.big_) {
            return rational(mpq_class(-*a.big_));
        }
        rational r;
        r.assign_reduced(-static_cast<i128>(a.num_), a.den_);
        return r;
    }

    friend rational operator+(const rational& a, const rational& b) {
        if (!a.big_ && !b.big_) {
            rational r;
            if (a.den_ == 1 && b.den_ == 1) {
                r.assign_reduced(static_cast<i128>(a.num_) + b.num_, 1);
            } else {
                r.assign_reduced(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                 static_cast<i128>(a.den_) * b.den_);
            }
            return r;
        }
        return rational(mpq_class(a.to_mpq() + b.to_mpq()));
    }

    friend rational operator-(const rational& a, const rational& b) { return a + (-b); }

    friend rational operator*(const rational& a, const rational& b) {
        if (!a.big_ && !b.big_) {
            rational r;
            r.assign_reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
            return r;
        }
        return rational(mpq_class(a.to_mpq() * b.to_mpq()));
    }

    friend rational operator/(const rational& a, const rational& b) {
        if (b.is_zero()) {
            throw std::domain_error("rational: division by zero");
        }
        if (!a.big_ && !b.big_) {
            rational r;
            r.assign_reduced(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
            return r;
        }
        return rational(mpq_class(a.to_mpq() / b.to_mpq()));
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        if (!a.big_ && !b.big_) {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
        // Canonical forms are unique and small values are never stored big.
        if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) {
            return false;
        }
        return *a.big_ == *b.big_;
    }

    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        if (!a.big_ && !b.big_) {
            const i128 l = static_cast<i128>(a.num_) * b.den_;
            const i128 r = static_cast<i128>(b.num_) * a.den_;
            return l <=> r;
        }
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.to_string(); }

private:
    using i128 = __int128;

    static i128 abs128(i128 v) { return v < 0 ? -v : v; }

    static i128 gcd128(i128 a, i128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static mpz_class mpz_from(i128 v) {
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
        mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    void assign_reduced(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        if (den != 1) {
            const i128 g = gcd128(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }
        constexpr i128 lo = INT64_MIN + 1;  // keep negation safe
        constexpr i128 hi = INT64_MAX;
        if (num >= lo && num <= hi && den <= hi) {
            num_ = static_cast<std::int64_t>(num);
            den_ = static_cast<std::int64_t>(den);
            big_.reset();
            return;
        }
        mpq_class q(mpz_from(num), mpz_from(den));
        q.canonicalize();
        assign_big(std::move(q));
    }

    void assign_big(mpq_class q) {
        const mpz_class& n = q.get_num();
        const mpz_class& d = q.get_den();
        if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != INT64_MIN) {
            num_ = n.get_si();
            den_ = d.get_si();
            big_.reset();
            return;
        }
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace cyclerees
