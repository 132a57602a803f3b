#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snc/errors.hpp"
#include "snc/hj.hpp"
#include "snc/ratfunc.hpp"
#include "snc/rational.hpp"

namespace snc {

struct RationalPoint {
    Rational x, y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline std::string to_string(const RationalPoint& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

// (u, v) -> (u^a v^b, u^c v^d) with signed exponents and |ad - bc| = 1.
struct MonomialMap {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }

    RationalPoint apply(const RationalPoint& p) const {
        require(det() == 1 || det() == -1, "monomial map is not unimodular");
        require((p.x != 0 || (a >= 0 && c >= 0)) && (p.y != 0 || (b >= 0 && d >= 0)),
                "monomial map divides by a zero coordinate");
        return {pow_rational(p.x, a) * pow_rational(p.y, b),
                pow_rational(p.x, c) * pow_rational(p.y, d)};
    }

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

// One chart stage: x_up = (x - c)^k / y^m, y_up = y^l / (x - c)^n.
struct TowerStage {
    Rational c = 0;
    long long k = 1, m = 1, n = 0, l = 1;

    friend bool operator==(const TowerStage&, const TowerStage&) = default;
};

struct ChartTower {
    std::vector<TowerStage> stages;

    std::size_t depth() const { return stages.size(); }

    friend bool operator==(const ChartTower&, const ChartTower&) = default;
};

// Stage with the Bezout complement filled in from (k, m).
inline TowerStage tower_stage(const Rational& c, long long k, long long m) {
    const auto bz = bezout_complement(k, m);
    return {c, bz.k, bz.m, bz.n, bz.l};
}

inline void validate_stage(const TowerStage& s, std::size_t index) {
    const std::string at = "stage " + std::to_string(index + 1) + ": ";
    require(s.k >= 1 && s.m >= 1, at + "exponents must be positive");
    require(s.m <= s.k, at + "exponent m exceeds k");
    require(std::gcd(s.k, s.m) == 1, at + "exponents are not coprime");
    require(s.n >= 0 && s.l >= 0, at + "negative Bezout entries");
    require(s.k * s.l - s.m * s.n == 1, at + "k*l - m*n = 1 fails");
}

inline void validate_tower(const ChartTower& t) {
    for (std::size_t i = 0; i < t.stages.size(); ++i)
        validate_stage(t.stages[i], i);
}

inline MonomialMap stage_up_map(const TowerStage& s) {
    return {s.k, -s.m, -s.n, s.l};
}
inline MonomialMap stage_down_map(const TowerStage& s) {
    return {s.l, s.m, s.n, s.k};
}

// Bottom-to-top chart coordinates. Rejects points meeting a stage's shifted
// axis or the y-axis, naming the stage.
inline RationalPoint tower_up(const ChartTower& t, RationalPoint p) {
    validate_tower(t);
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        const auto& s = t.stages[i];
        const std::string at = "stage " + std::to_string(i + 1) + ": ";
        const Rational u = p.x - s.c;
        require(u != 0, at + "the point lies on the shifted axis x = " + to_string(s.c));
        require(p.y != 0, at + "the point lies on the axis y = 0");
        p = {pow_rational(u, s.k) / pow_rational(p.y, s.m),
             pow_rational(p.y, s.l) / pow_rational(u, s.n)};
    }
    return p;
}

// Top-to-bottom chart coordinates: x = c + X^l Y^m, y = X^n Y^k per stage,
// applied from the last stage back to the first. Total on exact points.
inline RationalPoint tower_down(const ChartTower& t, RationalPoint p) {
    validate_tower(t);
    for (std::size_t i = t.stages.size(); i-- > 0;) {
        const auto& s = t.stages[i];
        p = {s.c + pow_rational(p.x, s.l) * pow_rational(p.y, s.m),
             pow_rational(p.x, s.n) * pow_rational(p.y, s.k)};
    }
    return p;
}

// The pullback identities of the one-stage chart map, checked exactly at a
// point: descending (s, t) and re-ascending recovers (s, t).
inline bool verify_chi_identity(long long k, long long m, const Rational& c,
                                const RationalPoint& pt) {
    const auto bz = bezout_complement(k, m);
    require(pt.x != 0 && pt.y != 0, "the identity needs nonzero coordinates");
    const Rational x = c + pow_rational(pt.x, bz.l) * pow_rational(pt.y, bz.m);
    const Rational y = pow_rational(pt.x, bz.n) * pow_rational(pt.y, bz.k);
    return pow_rational(x - c, k) / pow_rational(y, m) == pt.x &&
           pow_rational(y, bz.l) / pow_rational(x - c, bz.n) == pt.y;
}

// (x, y) -> (x(1+p), y(1+q)) with p, q regular and vanishing at the origin.
struct UnitFormMap {
    BivariateRationalFunction p, q;
};

inline void validate_unit_form(const UnitFormMap& a) {
    require(vanishes_on(a.p, Locus::Origin), "p of a unit form must vanish at the origin");
    require(vanishes_on(a.q, Locus::Origin), "q of a unit form must vanish at the origin");
}

// x -> ax/(a-x), y -> by/(b-y) in unit form: p = x/(a-x), q = y/(b-y).
inline UnitFormMap moebius_alpha(const Rational& a, const Rational& b) {
    require(a != 0 && b != 0, "moebius parameters must be nonzero");
    const auto x = BivariatePolynomial::x(), y = BivariatePolynomial::y();
    return {BivariateRationalFunction(x, BivariatePolynomial::constant(a) - x),
            BivariateRationalFunction(y, BivariatePolynomial::constant(b) - y)};
}

struct StageCertificate {
    std::size_t stage = 0;          // 1-based
    bool p_vanishes_on_axis = false; // new p vanishes on the new chart's x-axis
    bool q_vanishes_on_axis = false;
    bool center_fixed = false;       // both vanish at the next stage's center

    bool passed() const { return p_vanishes_on_axis && q_vanishes_on_axis && center_fixed; }
};

struct ConjugationOutcome {
    bool ok = false;
    std::vector<UnitFormMap> maps; // conjugated map after each stage
    std::vector<StageCertificate> certificates;
    std::string failure; // empty iff ok

    explicit operator bool() const { return ok; }
};

namespace detail {

// Regular at (u, 0) with value 0. Evaluating along y = 0 through the stored
// presentation; irregularity counts as failure, not as an exception.
inline bool fixes_center(const BivariateRationalFunction& f, const Rational& u) {
    if (f.denominator().evaluate(u, 0) == 0)
        return false;
    return f.numerator().evaluate(u, 0) == 0;
}

} // namespace detail

// Pushes the unit-form automorphism through every stage of the tower:
// recenters at c_i, substitutes the stage's monomial chart, and combines
//   p' = (1+p)^k (1+q)^-m - 1,   q' = (1+q)^l (1+p)^-n - 1.
// Each stage is certified: the new p, q must vanish on the new x-axis and at
// the next stage's center. The first failed predicate stops the walk and is
// reported with its stage; partial maps and certificates are kept.
inline ConjugationOutcome conjugate_automorphism(const ChartTower& t, const UnitFormMap& alpha) {
    validate_tower(t);
    validate_unit_form(alpha);

    using F = BivariateRationalFunction;
    const auto fail = [](ConjugationOutcome o, const std::string& why) {
        o.ok = false;
        o.failure = why;
        return o;
    };

    ConjugationOutcome out;
    F p = alpha.p, q = alpha.q;
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        const auto& s = t.stages[i];
        const std::string at = "stage " + std::to_string(i + 1) + ": ";

        // The map must fix the center (c_i, 0) being blown up.
        if (p.denominator().evaluate(s.c, 0) == 0)
            return fail(out, at + "p is not regular at the center");
        if (q.denominator().evaluate(s.c, 0) == 0)
            return fail(out, at + "q is not regular at the center");
        if (s.c * p.numerator().evaluate(s.c, 0) != 0)
            return fail(out, at + "the center x = " + to_string(s.c) + " is not fixed");

        // Recenter: in u = x - c the map is u -> u(1 + p_rec), with
        // p_rec = (u + c) p(u + c, y) / u.
        if (s.c != 0) {
            const F shifted_x(BivariatePolynomial::x() +
                              BivariatePolynomial::constant(s.c));
            p = reduced_presentation(shifted_x * substitute(p, shifted_x, F::y()) / F::x());
            q = reduced_presentation(substitute(q, shifted_x, F::y()));
        }

        // Monomial chart: u = X^l Y^m, y = X^n Y^k.
        const F sx(BivariatePolynomial::monomial(static_cast<int>(s.l), static_cast<int>(s.m)));
        const F sy(BivariatePolynomial::monomial(static_cast<int>(s.n), static_cast<int>(s.k)));
        const F one = F::constant(1);
        F P, Q;
        try {
            P = reduced_presentation(one + substitute(p, sx, sy));
            Q = reduced_presentation(one + substitute(q, sx, sy));
            if (P.is_zero() || Q.is_zero())
                return fail(out, at + "a unit factor collapses to the zero function");
            p = reduced_presentation(P.pow(s.k) * Q.pow(-s.m) - one);
            q = reduced_presentation(Q.pow(s.l) * P.pow(-s.n) - one);
        } catch (const domain_error& e) {
            return fail(out, at + e.what());
        }

        StageCertificate cert;
        cert.stage = i + 1;
        try {
            cert.p_vanishes_on_axis = vanishes_on(p, Locus::XAxis);
            cert.q_vanishes_on_axis = vanishes_on(q, Locus::XAxis);
        } catch (const domain_error& e) {
            out.certificates.push_back(cert);
            return fail(out, at + e.what());
        }
        const Rational next_center = i + 1 < t.stages.size() ? t.stages[i + 1].c : Rational(0);
        cert.center_fixed =
            detail::fixes_center(p, next_center) && detail::fixes_center(q, next_center);
        out.certificates.push_back(cert);
        out.maps.push_back({p, q});
        if (!cert.passed()) {
            const std::string what = !cert.p_vanishes_on_axis ? "p does not vanish on the new axis"
                                     : !cert.q_vanishes_on_axis
                                         ? "q does not vanish on the new axis"
                                         : "the next center is not fixed";
            return fail(out, at + what);
        }
    }
    out.ok = true;
    return out;
}

} // namespace snc
