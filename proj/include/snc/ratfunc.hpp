#pragma once

#include <string>
#include <vector>

#include "snc/errors.hpp"
#include "snc/polynomial.hpp"
#include "snc/rational.hpp"

namespace snc {

// Exact rational function in two variables. Fractions are never reduced;
// equality is semantic, by cross-multiplication. The zero function is 0/1.
class BivariateRationalFunction {
public:
    BivariateRationalFunction() : den_(BivariatePolynomial::constant(1)) {}
    explicit BivariateRationalFunction(BivariatePolynomial num,
                                       BivariatePolynomial den = BivariatePolynomial::constant(1))
        : num_(std::move(num)), den_(std::move(den)) {
        require(!den_.is_zero(), "denominator is identically zero");
    }
    static BivariateRationalFunction constant(const Rational& c) {
        return BivariateRationalFunction(BivariatePolynomial::constant(c));
    }
    static BivariateRationalFunction x() {
        return BivariateRationalFunction(BivariatePolynomial::x());
    }
    static BivariateRationalFunction y() {
        return BivariateRationalFunction(BivariatePolynomial::y());
    }

    const BivariatePolynomial& numerator() const { return num_; }
    const BivariatePolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend BivariateRationalFunction operator+(const BivariateRationalFunction& a,
                                               const BivariateRationalFunction& b) {
        return BivariateRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BivariateRationalFunction operator-(const BivariateRationalFunction& a,
                                               const BivariateRationalFunction& b) {
        return BivariateRationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    BivariateRationalFunction operator-() const {
        return BivariateRationalFunction(-num_, den_);
    }
    friend BivariateRationalFunction operator*(const BivariateRationalFunction& a,
                                               const BivariateRationalFunction& b) {
        return BivariateRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BivariateRationalFunction operator/(const BivariateRationalFunction& a,
                                               const BivariateRationalFunction& b) {
        require(!b.is_zero(), "division by the zero function");
        return BivariateRationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const BivariateRationalFunction& a,
                           const BivariateRationalFunction& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const BivariateRationalFunction& a,
                           const BivariateRationalFunction& b) {
        return !(a == b);
    }

    BivariateRationalFunction pow(long long e) const {
        if (e < 0) {
            require(!is_zero(), "zero function raised to a negative power");
            return BivariateRationalFunction(den_, num_).pow(-e);
        }
        BivariateRationalFunction out = constant(1), b = *this;
        auto u = static_cast<unsigned long long>(e);
        while (u) {
            if (u & 1ull)
                out = out * b;
            if (u >>= 1ull)
                b = b * b;
        }
        return out;
    }

    Rational evaluate(const Rational& u, const Rational& v) const {
        const Rational d = den_.evaluate(u, v);
        require(d != 0, "denominator vanishes at the evaluation point");
        return num_.evaluate(u, v) / d;
    }

private:
    BivariatePolynomial num_, den_;
};

namespace detail {

// P(gx, gy) for a polynomial P and rational-function arguments. Everything is
// brought over the one common denominator gx.den^X * gy.den^Y up front, so
// the accumulation stays polynomial-sized.
inline BivariateRationalFunction compose_polynomial(const BivariatePolynomial& p,
                                                    const BivariateRationalFunction& gx,
                                                    const BivariateRationalFunction& gy) {
    const int X = p.degree_x(), Y = p.degree_y();
    const auto powers = [](const BivariatePolynomial& base, int top) {
        std::vector<BivariatePolynomial> out{BivariatePolynomial::constant(1)};
        for (int i = 0; i < top; ++i)
            out.push_back(out.back() * base);
        return out;
    };
    const auto an = powers(gx.numerator(), X), ad = powers(gx.denominator(), X);
    const auto bn = powers(gy.numerator(), Y), bd = powers(gy.denominator(), Y);
    BivariatePolynomial num;
    for (const auto& [e, c] : p.terms())
        num += (an[e.first] * ad[X - e.first] * bn[e.second] * bd[Y - e.second]).scaled(c);
    return BivariateRationalFunction(num, ad[X] * bd[Y]);
}

} // namespace detail

// f(gx, gy), exact. Rejects substitutions under which the denominator of f
// becomes identically zero.
inline BivariateRationalFunction substitute(const BivariateRationalFunction& f,
                                            const BivariateRationalFunction& gx,
                                            const BivariateRationalFunction& gy) {
    const auto n = detail::compose_polynomial(f.numerator(), gx, gy);
    const auto d = detail::compose_polynomial(f.denominator(), gx, gy);
    require(!d.is_zero(), "substitution makes the denominator vanish identically");
    return n / d;
}

enum class Locus { XAxis, YAxis, Origin };

// Whether f vanishes identically on the locus, in the stored (unreduced)
// presentation: the restricted numerator must be zero while the restricted
// denominator is not. A denominator vanishing identically on the locus means
// f is not even regular there, which is an error, not "false".
inline bool vanishes_on(const BivariateRationalFunction& f, Locus locus) {
    switch (locus) {
    case Locus::XAxis: {
        require(!f.denominator().substitute_y(0).is_zero(), "not regular on the x-axis");
        return f.numerator().substitute_y(0).is_zero();
    }
    case Locus::YAxis: {
        require(!f.denominator().substitute_x(0).is_zero(), "not regular on the y-axis");
        return f.numerator().substitute_x(0).is_zero();
    }
    case Locus::Origin:
    default: {
        require(f.denominator().evaluate(0, 0) != 0, "not regular at the origin");
        return f.numerator().evaluate(0, 0) == 0;
    }
    }
}

// Divides numerator and denominator by the rational content of their joint
// coefficient list, leaving coprime integer coefficients. Semantically a
// no-op; keeps coefficient sizes bounded in iterated computations.
inline BivariateRationalFunction strip_content(const BivariateRationalFunction& f) {
    if (f.is_zero())
        return BivariateRationalFunction();
    Int g = 0, l = 1;
    const auto feed = [&](const BivariatePolynomial& p) {
        for (const auto& [e, c] : p.terms()) {
            g = gcd_int(g, abs(num(c)));
            l = l / gcd_int(l, den(c)) * den(c);
        }
    };
    feed(f.numerator());
    feed(f.denominator());
    const Rational scale(l, g); // content is g/l
    return BivariateRationalFunction(f.numerator().scaled(scale),
                                     f.denominator().scaled(scale));
}

// Cancels the largest monomial x^a y^b dividing both numerator and
// denominator. Semantically a no-op, but it keeps regularity along the axes
// visible in the stored presentation after monomial substitutions.
inline BivariateRationalFunction strip_monomials(const BivariateRationalFunction& f) {
    if (f.is_zero())
        return BivariateRationalFunction();
    int a = -1, b = -1;
    const auto feed = [&](const BivariatePolynomial& p) {
        for (const auto& [e, c] : p.terms()) {
            a = a < 0 ? e.first : std::min(a, e.first);
            b = b < 0 ? e.second : std::min(b, e.second);
        }
    };
    feed(f.numerator());
    feed(f.denominator());
    if (a == 0 && b == 0)
        return f;
    const auto shift = [&](const BivariatePolynomial& p) {
        BivariatePolynomial out;
        for (const auto& [e, c] : p.terms())
            out.add_term(e.first - a, e.second - b, c);
        return out;
    };
    return BivariateRationalFunction(shift(f.numerator()), shift(f.denominator()));
}

// Both cleanup passes; the identity as a rational function.
inline BivariateRationalFunction reduced_presentation(const BivariateRationalFunction& f) {
    return strip_content(strip_monomials(f));
}

// "poly" when the denominator is the constant 1, "(poly)/(poly)" otherwise.
inline std::string to_string(const BivariateRationalFunction& f) {
    if (f.denominator().is_one())
        return to_string(f.numerator());
    return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

inline BivariateRationalFunction parse_rational_function(const std::string& text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    const std::string s = text.substr(b, e - b);
    if (s.empty() || s.front() != '(')
        return BivariateRationalFunction(parse_polynomial(s));
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')' && --depth == 0) {
            close = i;
            break;
        }
    }
    require_structure(close != std::string::npos, "malformed rational function: " + s);
    std::size_t slash = close + 1;
    while (slash < s.size() && std::isspace(static_cast<unsigned char>(s[slash])))
        ++slash;
    require_structure(slash + 1 < s.size() && s[slash] == '/' && s.back() == ')',
                      "malformed rational function: " + s);
    std::size_t open = slash + 1;
    while (open < s.size() && std::isspace(static_cast<unsigned char>(s[open])))
        ++open;
    require_structure(s[open] == '(', "malformed rational function: " + s);
    return BivariateRationalFunction(parse_polynomial(s.substr(1, close - 1)),
                                     parse_polynomial(s.substr(open + 1, s.size() - open - 2)));
}

} // namespace snc
