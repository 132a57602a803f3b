#pragma once

#include <numeric>
#include <vector>

#include "snc/errors.hpp"
#include "snc/rational.hpp"
#include "snc/tower.hpp"

namespace snc {

// z -> (a + b z + c z^2, z): a parabolic section through a prescribed point,
// missing a prescribed finite set.
struct ParabolaCoefficients {
    Rational a, b, c;

    Rational s_at(const Rational& t) const { return a + b * t + c * t * t; }

    friend bool operator==(const ParabolaCoefficients&, const ParabolaCoefficients&) = default;
};

namespace detail {

// Deterministic enumeration of rationals by height max(|num|, den):
// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, -1/3, 2/3, -2/3, ...
inline std::vector<Rational> small_rationals(std::size_t count) {
    std::vector<Rational> seq{0};
    for (long long h = 1; seq.size() < count; ++h) {
        for (long long q = 1; q <= h; ++q) {
            if (q < h) {
                if (std::gcd(h, q) == 1) {
                    seq.push_back(Rational(h, q));
                    seq.push_back(Rational(-h, q));
                }
                continue;
            }
            for (long long p = 1; p <= h; ++p) {
                if (std::gcd(p, q) == 1 && (p == h || q == h)) {
                    seq.push_back(Rational(p, q));
                    seq.push_back(Rational(-p, q));
                }
            }
        }
    }
    seq.resize(count);
    return seq;
}

} // namespace detail

// First (a, b, c) in a deterministic grid over (b, c) — a is forced by the
// through-target condition a + b t0 + c t0^2 = s0 — whose parabola misses
// every avoid point: a + b t1 + c t1^2 != s1. A solution always exists, and
// with c = 0 at most one b fails per avoid point, so the bounded grid cannot
// run out before succeeding.
inline ParabolaCoefficients find_avoiding_parabola(const RationalPoint& target,
                                                   const std::vector<RationalPoint>& avoid) {
    require(target.x != 0 && target.y != 0, "target must have nonzero coordinates");
    for (const auto& pt : avoid)
        require(!(pt == target), "target lies in the avoid set");

    const std::size_t limit = 2 * avoid.size() + 8;
    const auto grid = detail::small_rationals(limit + 1);
    for (std::size_t total = 0; total <= limit; ++total) {
        for (std::size_t i = 0; i <= total; ++i) {
            ParabolaCoefficients out;
            out.b = grid[i];
            out.c = grid[total - i];
            out.a = target.x - out.b * target.y - out.c * target.y * target.y;
            bool misses = true;
            for (const auto& pt : avoid) {
                if (out.s_at(pt.y) == pt.x) {
                    misses = false;
                    break;
                }
            }
            if (misses)
                return out;
        }
    }
    throw internal_error("parabola search grid exhausted");
}

} // namespace snc
