#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "snc/blowup.hpp"
#include "snc/errors.hpp"
#include "snc/graph.hpp"
#include "snc/hj.hpp"

namespace snc {

enum class VertexKind { BoundaryX, BoundaryY, Exceptional };

inline std::string to_string(VertexKind k) {
    switch (k) {
    case VertexKind::BoundaryX: return "boundary-x";
    case VertexKind::BoundaryY: return "boundary-y";
    case VertexKind::Exceptional: return "exceptional";
    }
    throw internal_error("unhandled vertex kind");
}

// Dual graph whose vertices carry the order of y^m/x^k along the component:
// -k on the {x = 0} boundary, +m on the {y = 0} boundary, and the divisor
// coefficient on each exceptional curve. Boundary weights are sentinels with
// no intersection-theory meaning.
struct DecoratedGraph {
    WeightedDualGraph graph;
    std::map<VertexId, long long> coefficients;
    std::map<VertexId, VertexKind> kinds;

    long long coefficient(const VertexId& v) const {
        const auto it = coefficients.find(v);
        require_structure(it != coefficients.end(), "no coefficient for vertex " + v);
        return it->second;
    }

    VertexKind kind(const VertexId& v) const {
        const auto it = kinds.find(v);
        require_structure(it != kinds.end(), "no kind for vertex " + v);
        return it->second;
    }
};

// Brute-force resolution of the indeterminacy of y^m/x^k by divisor
// bookkeeping: blow up the unique edge joining a strictly negative coefficient
// to a strictly positive one until none is left. Deliberately ignorant of
// continued fractions; serves as the independent oracle for resolution_chain.
inline DecoratedGraph simulate(long long k, long long m) {
    require(k >= 1 && m >= 1, "exponents must be positive");
    require(std::gcd(k, m) == 1, "exponents are not coprime");
    DecoratedGraph d;
    d.graph.add_vertex("bx", 0);
    d.graph.add_vertex("by", 0);
    d.graph.add_edge("bx", "by");
    d.coefficients["bx"] = -k;
    d.coefficients["by"] = m;
    d.kinds["bx"] = VertexKind::BoundaryX;
    d.kinds["by"] = VertexKind::BoundaryY;

    std::size_t created = 0;
    for (;;) {
        std::vector<Edge> mixed;
        for (const auto& e : d.graph.edges()) {
            const auto a = d.coefficient(e.first), b = d.coefficient(e.second);
            if ((a < 0 && b > 0) || (a > 0 && b < 0))
                mixed.push_back(e);
        }
        if (mixed.empty())
            break;
        check_internal(mixed.size() == 1,
                       "indeterminacy resolution found several mixed-sign edges");
        const auto [a, b] = mixed.front();
        const VertexId fresh = "E" + std::to_string(++created);
        d.graph = inner_blowup(d.graph, a, b, fresh);
        d.coefficients[fresh] = d.coefficient(a) + d.coefficient(b);
        d.kinds[fresh] = VertexKind::Exceptional;
    }
    check_internal(created > 0, "simulation performed no blow-up");
    return d;
}

inline std::size_t blowup_count(const DecoratedGraph& d) {
    std::size_t n = 0;
    for (const auto& [id, kind] : d.kinds) {
        if (kind == VertexKind::Exceptional)
            ++n;
    }
    return n;
}

// The exceptional subgraph of a finished simulation as an HJChain, stored from
// the end that meets the {y = 0} boundary, plus the ids in that order.
inline std::pair<HJChain, std::vector<VertexId>> exceptional_chain(const DecoratedGraph& d) {
    WeightedDualGraph ex = d.graph;
    const auto bx_neighbors = d.graph.neighbors("bx");
    const auto by_neighbors = d.graph.neighbors("by");
    check_internal(bx_neighbors.size() == 1 && by_neighbors.size() == 1,
                   "boundary vertices must end at one chain end each");
    ex.remove_vertex("bx");
    ex.remove_vertex("by");
    const auto order = linear_order(ex);
    check_internal(order.has_value(), "exceptional locus is not a chain");
    std::vector<VertexId> ids = *order;
    if (ids.front() != by_neighbors[0])
        std::reverse(ids.begin(), ids.end());
    check_internal(ids.front() == by_neighbors[0] && ids.back() == bx_neighbors[0],
                   "boundaries do not meet the chain ends");
    HJChain c;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        c.weights.push_back(ex.weight(ids[i]));
        if (ex.weight(ids[i]) == -1)
            c.minus_one = i;
    }
    return {c, ids};
}

struct AttachmentShape {
    std::size_t x_meets = 0; // index in chain storage order (y-side end = 0)
    std::size_t y_meets = 0;

    friend bool operator==(const AttachmentShape&, const AttachmentShape&) = default;
};

// Which exceptional components the two boundary transforms intersect, as
// indices into the chain in storage order.
inline AttachmentShape attachment_shape(long long k, long long m) {
    const auto d = simulate(k, m);
    const auto [chain, ids] = exceptional_chain(d);
    AttachmentShape s;
    const auto bx_neighbor = d.graph.neighbors("bx").at(0);
    const auto by_neighbor = d.graph.neighbors("by").at(0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == bx_neighbor)
            s.x_meets = i;
        if (ids[i] == by_neighbor)
            s.y_meets = i;
    }
    return s;
}

} // namespace snc
