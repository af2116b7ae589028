#pragma once

/**
 * @file text.hpp
 * @brief Canonical text format for monomials and polynomials.
 *
 * Monomials are `*`-joined powers (`x5*y1`, `y1^2*y3`), variables printed
 * x-block first, then y, then s, each by index. Polynomials are terms in
 * descending order joined by ` + ` / ` - `. The parser accepts the same
 * grammar with arbitrary whitespace; coefficients may be integers or p/q.
 */

#include "polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclerees {

inline std::string to_string(const ring_spec& ring, const monomial& m) {
    std::string out;
    for (auto v : ring.display_order()) {
        const unsigned e = m[v];
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += ring.name(v);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

inline std::string to_string(const polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    const ring_spec& ring = *p.ring();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool neg = t.coeff.sign() < 0;
        const rational mag = neg ? -t.coeff : t.coeff;
        if (first) {
            if (neg) {
                out += '-';
            }
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) {
                out += mag.to_string();
                out += '*';
            }
            out += to_string(ring, t.mono);
        }
    }
    return out;
}

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class poly_parser {
public:
    poly_parser(std::string_view text, order_ptr order) : text_(text), order_(std::move(order)) {}

    polynomial parse() {
        std::vector<term> terms;
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
        }
        terms.push_back(parse_term(negate));
        skip_ws();
        while (!at_end()) {
            const char c = get();
            if (c != '+' && c != '-') {
                fail(std::string("expected '+' or '-' but found '") + c + "'");
            }
            terms.push_back(parse_term(c == '-'));
            skip_ws();
        }
        return polynomial(order_, std::move(terms));
    }

private:
    term parse_term(bool negate) {
        const std::size_t n = order_->size();
        term t{rational(1), monomial(n)};
        bool need_factor = true;
        while (need_factor) {
            skip_ws();
            if (at_end()) {
                fail("unexpected end of input");
            }
            if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                t.coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(peek())) != 0 || peek() == '_') {
                const std::string name = parse_identifier();
                auto var = order_->ring()->find(name);
                if (!var) {
                    fail("unknown variable '" + name + "'");
                }
                unsigned e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    get();
                    skip_ws();
                    e = parse_unsigned();
                }
                t.mono = t.mono * monomial::variable(n, *var, e);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) {
                get();
            }
        }
        if (negate) {
            t.coeff = -t.coeff;
        }
        return t;
    }

    rational parse_number() {
        std::string lit = digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            get();
            skip_ws();
            lit += '/';
            lit += digits();
        }
        return rational::parse(lit);
    }

    unsigned parse_unsigned() {
        const std::string d = digits();
        const unsigned long v = std::stoul(d);
        if (v > monomial::max_exponent) {
            fail("exponent too large");
        }
        return static_cast<unsigned>(v);
    }

    std::string digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            d += get();
        }
        if (d.empty()) {
            fail("expected digits");
        }
        return d;
    }

    std::string parse_identifier() {
        std::string id;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '_')) {
            id += get();
        }
        return id;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
    }
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    order_ptr order_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline polynomial parse_polynomial(std::string_view text, order_ptr order) {
    return detail::poly_parser(text, std::move(order)).parse();
}

}  // namespace cyclerees
