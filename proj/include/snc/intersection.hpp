#pragma once

#include <utility>
#include <vector>

#include "snc/graph.hpp"
#include "snc/rational.hpp"

namespace snc {

// Symmetric integer matrix with the self-intersections on the diagonal and
// edge multiplicities off it, rows/columns in id order.
struct IntersectionMatrix {
    std::vector<VertexId> order;
    std::vector<std::vector<Int>> entries;
};

inline IntersectionMatrix intersection_matrix(const WeightedDualGraph& g) {
    IntersectionMatrix m;
    m.order = g.vertex_ids();
    const std::size_t n = m.order.size();
    m.entries.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m.entries[i][i] = g.weight(m.order[i]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Int mult = g.edge_multiplicity(m.order[i], m.order[j]);
            m.entries[i][j] = mult;
            m.entries[j][i] = mult;
        }
    }
    return m;
}

// Fraction-free Gaussian elimination with row pivoting; exact.
inline Int determinant(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Leading principal minors det(A[0..k][0..k]) for k = 1..n, via pivot-free
// Bareiss. A zero minor ends the list early (later pivots are undefined), which
// is fine for a definiteness test: a zero leading minor already refutes it.
inline std::vector<Int> leading_principal_minors(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    std::vector<Int> minors;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(a[k][k]);
        if (a[k][k] == 0)
            break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return minors;
}

struct NecessaryCriterionResult {
    bool unimodular = false;       // |det| = 1
    bool negative_definite = false; // Sylvester: minors alternate (-1)^k

    friend bool operator==(const NecessaryCriterionResult&,
                           const NecessaryCriterionResult&) = default;
};

// Necessary condition for contractibility to a smooth point: the intersection
// matrix of an exceptional divisor of a composition of point blow-ups is
// unimodular and negative definite. Not sufficient (see the E8 witness in the
// test suite).
inline NecessaryCriterionResult necessary_criterion(const WeightedDualGraph& g) {
    require(!g.empty(), "necessary_criterion needs a nonempty graph");
    const auto m = intersection_matrix(g);
    NecessaryCriterionResult out;
    const Int d = determinant(m.entries);
    out.unimodular = (d == 1 || d == -1);
    const auto minors = leading_principal_minors(m.entries);
    out.negative_definite = minors.size() == m.order.size();
    for (std::size_t k = 0; k < minors.size() && out.negative_definite; ++k) {
        const bool want_negative = (k % 2 == 0);
        if (want_negative ? minors[k] >= 0 : minors[k] <= 0)
            out.negative_definite = false;
    }
    return out;
}

} // namespace snc
