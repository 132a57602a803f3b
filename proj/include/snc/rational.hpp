#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "snc/errors.hpp"

namespace snc {

// Exact arbitrary-precision scalars. Everything in this library computes over
// these; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

// Canonical text form: lowest terms, sign on the numerator, "/1" omitted.
inline std::string to_string(const Rational& r) {
    if (den(r) == 1)
        return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Parses "p", "-p", "p/q" (whitespace-free). Denominator 0 is rejected.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        const Int p(text.substr(0, slash));
        const Int q(text.substr(slash + 1));
        require_structure(q != 0, "rational with zero denominator: " + text);
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const structural_error*>(&e))
            throw;
        throw structural_error("malformed rational: " + text);
    }
}

inline Int pow_int(Int base, unsigned exp) {
    Int out = 1;
    while (exp) {
        if (exp & 1u)
            out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

// base^exp for possibly negative exp; base must be nonzero when exp < 0.
inline Rational pow_rational(const Rational& base, long exp) {
    if (exp < 0) {
        require(base != 0, "zero raised to a negative power");
        const Rational inv(den(base), num(base));
        return pow_rational(inv, -exp);
    }
    Rational out = 1, b = base;
    auto e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1ul)
            out *= b;
        b *= b;
        e >>= 1ul;
    }
    return out;
}

inline Int gcd_int(Int a, Int b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace snc
