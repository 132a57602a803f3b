#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "snc/errors.hpp"
#include "snc/rational.hpp"

namespace snc {

// Sparse exact bivariate polynomial over Rational: map from exponent pairs
// (dx, dy) to nonzero coefficients. All arithmetic is exact.
class BivariatePolynomial {
public:
    using Exponents = std::pair<int, int>;
    using TermMap = std::map<Exponents, Rational>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Rational& c) {
        BivariatePolynomial p;
        p.add_term(0, 0, c);
        return p;
    }
    static BivariatePolynomial monomial(int dx, int dy, const Rational& c = 1) {
        require(dx >= 0 && dy >= 0, "negative exponent in a polynomial");
        BivariatePolynomial p;
        p.add_term(dx, dy, c);
        return p;
    }
    static BivariatePolynomial x() { return monomial(1, 0); }
    static BivariatePolynomial y() { return monomial(0, 1); }

    void add_term(int dx, int dy, const Rational& c) {
        if (c == 0)
            return;
        const Exponents e{dx, dy};
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
               terms_.begin()->second == 1;
    }

    int degree_x() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e.second);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e.first + e.second);
        return d;
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e.first, e.second, c);
        return *this;
    }
    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e.first, e.second, -c);
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        a += b;
        return a;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        a -= b;
        return a;
    }
    BivariatePolynomial operator-() const {
        BivariatePolynomial p;
        for (const auto& [e, c] : terms_)
            p.terms_.emplace(e, -c);
        return p;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        BivariatePolynomial p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                p.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return p;
    }
    BivariatePolynomial& operator*=(const BivariatePolynomial& o) {
        *this = *this * o;
        return *this;
    }
    BivariatePolynomial scaled(const Rational& c) const {
        BivariatePolynomial p;
        if (c == 0)
            return p;
        for (const auto& [e, k] : terms_)
            p.terms_.emplace(e, k * c);
        return p;
    }
    BivariatePolynomial pow(unsigned e) const {
        BivariatePolynomial out = constant(1), b = *this;
        while (e) {
            if (e & 1u)
                out *= b;
            if (e >>= 1u)
                b *= b;
        }
        return out;
    }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return !(a == b);
    }

    Rational evaluate(const Rational& u, const Rational& v) const {
        Rational out = 0;
        for (const auto& [e, c] : terms_)
            out += c * pow_rational(u, e.first) * pow_rational(v, e.second);
        return out;
    }

    // Partial evaluation y := v; the result involves x only.
    BivariatePolynomial substitute_y(const Rational& v) const {
        BivariatePolynomial p;
        for (const auto& [e, c] : terms_)
            p.add_term(e.first, 0, c * pow_rational(v, e.second));
        return p;
    }
    // Partial evaluation x := u; the result involves y only.
    BivariatePolynomial substitute_x(const Rational& u) const {
        BivariatePolynomial p;
        for (const auto& [e, c] : terms_)
            p.add_term(0, e.second, c * pow_rational(u, e.first));
        return p;
    }

private:
    TermMap terms_;
};

namespace detail {

inline void append_monomial(std::string& out, const BivariatePolynomial::Exponents& e) {
    if (e.first > 0) {
        out += "x";
        if (e.first > 1)
            out += "^" + std::to_string(e.first);
    }
    if (e.second > 0) {
        if (e.first > 0)
            out += "*";
        out += "y";
        if (e.second > 1)
            out += "^" + std::to_string(e.second);
    }
}

} // namespace detail

// Canonical text form, x-degree descending then y-degree ascending:
// "3/2*x^2*y - y^3", "1 - y".
inline std::string to_string(const BivariatePolynomial& p) {
    if (p.is_zero())
        return "0";
    std::vector<std::pair<BivariatePolynomial::Exponents, Rational>> ordered(
        p.terms().begin(), p.terms().end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first)
            return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::string out;
    for (const auto& [e, c] : ordered) {
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = neg ? Rational(-c) : c;
        if (e == BivariatePolynomial::Exponents{0, 0}) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1)
            out += to_string(mag) + "*";
        detail::append_monomial(out, e);
    }
    return out;
}

namespace detail {

// Recursive-descent parser for the canonical polynomial notation: signed terms
// joined by +/-, each a '*'-separated product of rational constants and powers
// x^a, y^b. Whitespace is skipped.
class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    BivariatePolynomial parse() {
        auto p = parse_sum();
        skip_space();
        require_structure(pos_ == s_.size(),
                          "malformed polynomial: trailing input at '" + rest() + "'");
        return p;
    }

private:
    BivariatePolynomial parse_sum() {
        BivariatePolynomial acc;
        bool neg = false;
        skip_space();
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            auto t = parse_term();
            acc += neg ? -t : t;
            skip_space();
            if (peek() == '+')
                neg = false;
            else if (peek() == '-')
                neg = true;
            else
                break;
            ++pos_;
        }
        return acc;
    }

    BivariatePolynomial parse_term() {
        auto p = parse_factor();
        for (;;) {
            skip_space();
            if (peek() != '*')
                return p;
            ++pos_;
            p *= parse_factor();
        }
    }

    BivariatePolynomial parse_factor() {
        skip_space();
        const char c = peek();
        if (c == 'x' || c == 'y') {
            ++pos_;
            int e = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                e = parse_uint();
            }
            return BivariatePolynomial::monomial(c == 'x' ? e : 0, c == 'x' ? 0 : e);
        }
        require_structure(std::isdigit(static_cast<unsigned char>(c)) != 0,
                          "malformed polynomial: expected a factor at '" + rest() + "'");
        const Int p = parse_int();
        skip_space();
        if (peek() != '/')
            return BivariatePolynomial::constant(Rational(p));
        ++pos_;
        const Int q = parse_int();
        require_structure(q != 0, "malformed polynomial: zero denominator");
        return BivariatePolynomial::constant(Rational(p, q));
    }

    Int parse_int() {
        skip_space();
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            digits += s_[pos_++];
        require_structure(!digits.empty(),
                          "malformed polynomial: expected digits at '" + rest() + "'");
        return Int(digits);
    }

    int parse_uint() {
        const Int v = parse_int();
        require_structure(v <= 1000000, "polynomial exponent out of range");
        return static_cast<int>(v);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    std::string rest() const { return s_.substr(pos_, 16); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline BivariatePolynomial parse_polynomial(const std::string& text) {
    return detail::PolyParser(text).parse();
}

} // namespace snc
