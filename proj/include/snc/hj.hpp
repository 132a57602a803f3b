#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "snc/blowup.hpp"
#include "snc/errors.hpp"
#include "snc/graph.hpp"
#include "snc/rational.hpp"

namespace snc {

// Partial quotients of the ordinary continued fraction of a/b.
inline std::vector<long long> cf_quotients(long long a, long long b) {
    require(a >= 1 && b >= 1, "continued fraction needs positive arguments");
    std::vector<long long> q;
    while (b != 0) {
        q.push_back(a / b);
        const long long r = a % b;
        a = b;
        b = r;
    }
    return q;
}

// kl - mn = 1 with gcd(k, m) = 1 and m <= k. The unique such pair with
// 0 < l <= m (degenerating to n = k-1, l = 1 when m = 1).
struct BezoutPair {
    long long k = 1, m = 1, n = 0, l = 1;

    friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

inline BezoutPair bezout_complement(long long k, long long m) {
    require(k >= 1 && m >= 1, "exponents must be positive");
    require(m <= k, "exponent m exceeds k");
    require(std::gcd(k, m) == 1, "exponents are not coprime");
    if (m == 1)
        return {k, 1, k - 1, 1};
    long long l = 1;
    while ((__int128{k} * l) % m != 1)
        ++l;
    const long long n = static_cast<long long>((__int128{k} * l - 1) / m);
    check_internal(__int128{k} * l - __int128{m} * n == 1, "Bezout identity failed");
    return {k, m, n, l};
}

// The minimal resolution chain of y^m/x^k: a linear graph with a unique
// (-1)-vertex, all other weights <= -2. Weights are stored in chain order
// starting at the end met by the proper transform of {y = 0} (the +m
// boundary); the opposite end meets {x = 0} (the -k boundary).
struct HJChain {
    std::vector<int> weights;  // y-side end first
    std::size_t minus_one = 0; // index of the unique (-1)

    std::size_t length() const { return weights.size(); }
    std::size_t y_side() const { return 0; }
    std::size_t x_side() const { return weights.empty() ? 0 : weights.size() - 1; }

    std::vector<int> weights_from_x_side() const {
        return {weights.rbegin(), weights.rend()};
    }

    static HJChain from_x_side(const std::vector<int>& x_first, std::size_t minus_one_x_index) {
        HJChain c;
        c.weights.assign(x_first.rbegin(), x_first.rend());
        c.minus_one = x_first.size() - 1 - minus_one_x_index;
        return c;
    }

    friend bool operator==(const HJChain&, const HJChain&) = default;
};

// Vertex ids C1..Cn in storage order (C1 = y-side end).
inline WeightedDualGraph chain_to_graph(const HJChain& c) {
    WeightedDualGraph g;
    for (std::size_t i = 0; i < c.weights.size(); ++i)
        g.add_vertex("C" + std::to_string(i + 1), c.weights[i]);
    for (std::size_t i = 0; i + 1 < c.weights.size(); ++i)
        g.add_edge("C" + std::to_string(i + 1), "C" + std::to_string(i + 2));
    return g;
}

namespace detail {

struct Ray {
    Int x, y;

    Ray operator+(const Ray& o) const { return {x + o.x, y + o.y}; }
    friend bool operator==(const Ray&, const Ray&) = default;
};

inline Int ray_det(const Ray& u, const Ray& v) { return u.x * v.y - u.y * v.x; }

// Fan rays of the minimal resolution of y^m/x^k, in slope order from (1,0)
// to (0,1), endpoints included. The interior rays are the Stern-Brocot
// ancestors of (m, k) together with (m, k) itself.
inline std::vector<Ray> resolution_fan(long long k, long long m) {
    const Ray target{m, k};
    std::vector<Ray> inner;
    Ray lo{1, 0}, hi{0, 1};
    for (;;) {
        const Ray mid = lo + hi;
        inner.push_back(mid);
        const Int d = ray_det(mid, target);
        if (d == 0)
            break;
        if (d > 0)
            lo = mid;
        else
            hi = mid;
    }
    std::sort(inner.begin(), inner.end(),
              [](const Ray& a, const Ray& b) { return ray_det(a, b) > 0; });
    std::vector<Ray> fan{{1, 0}};
    fan.insert(fan.end(), inner.begin(), inner.end());
    fan.push_back({0, 1});
    return fan;
}

// prev + next = a * cur for adjacent rays of a smooth fan; the weight is -a.
inline Int fan_coefficient(const Ray& prev, const Ray& cur, const Ray& next) {
    const Ray sum = prev + next;
    check_internal(cur.x != 0 && sum.x % cur.x == 0 && sum.y == (sum.x / cur.x) * cur.y,
                   "fan adjacency is not smooth");
    return sum.x / cur.x;
}

} // namespace detail

// Minimal resolution chain of y^m/x^k for coprime k, m >= 1.
inline HJChain resolution_chain(long long k, long long m) {
    require(k >= 1 && m >= 1, "exponents must be positive");
    require(std::gcd(k, m) == 1, "exponents are not coprime");
    const auto fan = detail::resolution_fan(k, m);
    const detail::Ray target{m, k};
    std::vector<int> x_first;
    std::size_t minus_one_x = 0;
    for (std::size_t i = 1; i + 1 < fan.size(); ++i) {
        const Int a = detail::fan_coefficient(fan[i - 1], fan[i], fan[i + 1]);
        x_first.push_back(-static_cast<int>(a));
        if (fan[i] == target)
            minus_one_x = i - 1;
    }
    check_internal(x_first[minus_one_x] == -1, "resolution chain lost its (-1)-vertex");
    return HJChain::from_x_side(x_first, minus_one_x);
}

// Inverse of resolution_chain. Rebuilds the fan from the weights by the
// continuant recurrence and validates wholesale against resolution_chain;
// anything else is rejected as not an HJ chain.
inline std::pair<long long, long long> recover_exponents(const HJChain& c) {
    require(!c.weights.empty(), "empty chain is not an HJ chain");
    std::size_t count_minus_one = 0;
    for (const int w : c.weights) {
        if (w == -1)
            ++count_minus_one;
        else
            require(w <= -2, "not an HJ chain: weight " + std::to_string(w));
    }
    require(count_minus_one == 1, "not an HJ chain: needs exactly one (-1)-vertex, found " +
                                      std::to_string(count_minus_one));
    require(c.minus_one < c.weights.size() && c.weights[c.minus_one] == -1,
            "chain marker does not point at the (-1)-vertex");

    const auto x_first = c.weights_from_x_side();
    const std::size_t r = x_first.size();
    std::vector<Int> a(r);
    for (std::size_t i = 0; i < r; ++i)
        a[i] = -Int(x_first[i]);

    // v_{i+1} = a_i v_i - v_{i-1} with v_0 = (1,0), v_{r+1} = (0,1); writing
    // v_i = A_i v_1 + B_i v_0 pins v_1 once A at the far end is forced to 1.
    Int A_prev = 0, A_cur = 1, B_prev = 1, B_cur = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const Int A_next = a[i] * A_cur - A_prev;
        const Int B_next = a[i] * B_cur - B_prev;
        A_prev = A_cur;
        A_cur = A_next;
        B_prev = B_cur;
        B_cur = B_next;
    }
    require(A_cur == 1, "not an HJ chain: weight sequence is not a resolution chain");

    std::vector<detail::Ray> v(r + 2);
    v[0] = {1, 0};
    v[1] = {-B_cur, 1};
    for (std::size_t i = 1; i <= r; ++i)
        v[i + 1] = {a[i - 1] * v[i].x - v[i - 1].x, a[i - 1] * v[i].y - v[i - 1].y};
    require(v[r + 1] == detail::Ray{0, 1},
            "not an HJ chain: weight sequence is not a resolution chain");
    for (std::size_t i = 1; i <= r; ++i)
        require(v[i].x >= 1 && v[i].y >= 1,
                "not an HJ chain: weight sequence is not a resolution chain");

    const std::size_t minus_one_x = r - 1 - c.minus_one;
    const detail::Ray rho = v[minus_one_x + 1];
    require(rho.x <= INT64_MAX && rho.y <= INT64_MAX, "chain exponents out of range");
    const auto m = static_cast<long long>(rho.x);
    const auto kk = static_cast<long long>(rho.y);
    require(std::gcd(kk, m) == 1 && resolution_chain(kk, m) == c,
            "not an HJ chain: weight sequence is not a resolution chain");
    return {kk, m};
}

// Exhaustive reference for recover_exponents: try coprime pairs with entries
// bounded by a Fibonacci-type function of the chain length.
inline std::pair<long long, long long> recover_exponents_by_search(const HJChain& c) {
    long long bound = 1, prev = 1;
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
        const long long next = bound + prev;
        prev = bound;
        bound = next;
    }
    const long long want = static_cast<long long>(c.weights.size());
    for (long long k = 1; k <= bound; ++k) {
        for (long long m = 1; m <= bound; ++m) {
            if (std::gcd(k, m) != 1)
                continue;
            const auto q = cf_quotients(k, m);
            if (std::accumulate(q.begin(), q.end(), 0LL) != want)
                continue;
            if (resolution_chain(k, m) == c)
                return {k, m};
        }
    }
    throw domain_error("not an HJ chain: no exponent pair matches");
}

// 2x2 integer matrix acting on exponent vectors.
struct TransitionMatrix {
    long long a = 1, b = 0, c = 0, d = 1; // rows (a b), (c d)

    long long det() const { return a * d - b * c; }

    friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
};

inline TransitionMatrix operator*(const TransitionMatrix& p, const TransitionMatrix& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
            p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

struct TransitionData {
    TransitionMatrix top;     // (x1, y1) = (x^k/y^m, y^l/x^n)
    TransitionMatrix inverse; // (x, y) = (x1^l y1^m, x1^n y1^k)
};

// Exponent matrices of the coordinate change across one resolution, with the
// sign selection that keeps the inverse entries nonnegative.
inline TransitionData transition_data(long long k, long long m) {
    const auto bz = bezout_complement(k, m);
    TransitionData t;
    t.top = {bz.k, -bz.m, -bz.n, bz.l};
    t.inverse = {bz.l, bz.m, bz.n, bz.k};
    check_internal(t.top.det() == 1 && t.inverse.det() == 1,
                   "transition matrices must have determinant +1");
    check_internal(t.top * t.inverse == TransitionMatrix{},
                   "transition matrices must be mutually inverse");
    return t;
}

} // namespace snc
