#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "snc/graph.hpp"

namespace snc {

// Blow-up at a node of the curve (an intersection point). The edge A--B is
// replaced by A--E--B where E is the new (-1)-curve, and both touched weights
// drop by one.
inline WeightedDualGraph inner_blowup(const WeightedDualGraph& g, const VertexId& a,
                                      const VertexId& b, const VertexId& new_id) {
    require_structure(g.has_edge(a, b), "no edge " + a + "--" + b + " to blow up");
    WeightedDualGraph out = g;
    out.remove_edge(a, b);
    out.set_weight(a, out.weight(a) - 1);
    out.set_weight(b, out.weight(b) - 1);
    out.add_vertex(new_id, -1);
    out.add_edge(a, new_id);
    out.add_edge(new_id, b);
    return out;
}

inline WeightedDualGraph inner_blowup(const WeightedDualGraph& g, const VertexId& a,
                                      const VertexId& b) {
    return inner_blowup(g, a, b, g.fresh_id("E"));
}

// Blow-up at a smooth point of one component: the touched weight drops by one
// and a new (-1)-leaf is attached.
inline WeightedDualGraph outer_blowup(const WeightedDualGraph& g, const VertexId& v,
                                      const VertexId& new_id) {
    require_structure(g.has_vertex(v), "no vertex " + v + " to blow up");
    WeightedDualGraph out = g;
    out.set_weight(v, out.weight(v) - 1);
    out.add_vertex(new_id, -1);
    out.add_edge(v, new_id);
    return out;
}

inline WeightedDualGraph outer_blowup(const WeightedDualGraph& g, const VertexId& v) {
    return outer_blowup(g, v, g.fresh_id("E"));
}

inline bool can_blow_down(const WeightedDualGraph& g, const VertexId& v) {
    if (!g.has_vertex(v) || g.weight(v) != -1)
        return false;
    const auto ns = g.neighbors(v);
    if (ns.size() > 2)
        return false;
    return ns.size() < 2 || ns[0] != ns[1];
}

// Castelnuovo contraction of a (-1)-curve that is not a branch point. Exact
// inverse of the two blow-ups: degree 2 reconnects the neighbors, degree 1
// removes a leaf, degree 0 deletes an isolated vertex.
inline WeightedDualGraph blow_down(const WeightedDualGraph& g, const VertexId& v) {
    require_structure(g.has_vertex(v), "unknown vertex: " + v);
    require(g.weight(v) == -1,
            "cannot contract " + v + ": weight is not -1");
    const auto ns = g.neighbors(v);
    require(ns.size() <= 2, "cannot contract branch point " + v);
    if (ns.size() == 2)
        require(ns[0] != ns[1],
                "contracting " + v + " would create a self-loop (non-SNC)");
    WeightedDualGraph out = g;
    out.remove_vertex(v);
    for (const auto& n : ns)
        out.set_weight(n, out.weight(n) + 1);
    if (ns.size() == 2)
        out.add_edge(ns[0], ns[1]);
    return out;
}

struct ContractionStep {
    VertexId vertex;
    std::vector<VertexId> neighbors; // at the time of contraction

    friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

struct ContractionSequence {
    std::vector<ContractionStep> steps;
};

struct NotContractible {
    WeightedDualGraph residual; // the stuck graph
};

using ContractionOutcome = std::variant<ContractionSequence, NotContractible>;

inline std::optional<VertexId> first_contractible_vertex(const WeightedDualGraph& g) {
    for (const auto& [id, data] : g.vertices()) {
        if (can_blow_down(g, id))
            return id;
    }
    return std::nullopt;
}

// Greedy contraction, always taking the lowest-id legal (-1)-vertex. Returns
// the full sequence if the empty graph is reached, otherwise the stuck
// residual. Order does not affect the outcome (confluence is property-tested),
// only the reported sequence.
inline ContractionOutcome contract_fully(const WeightedDualGraph& g) {
    WeightedDualGraph cur = g;
    ContractionSequence seq;
    while (!cur.empty()) {
        const auto v = first_contractible_vertex(cur);
        if (!v)
            return NotContractible{std::move(cur)};
        seq.steps.push_back({*v, cur.neighbors(*v)});
        cur = blow_down(cur, *v);
    }
    return seq;
}

inline bool is_contractible(const WeightedDualGraph& g) {
    return std::holds_alternative<ContractionSequence>(contract_fully(g));
}

} // namespace snc
