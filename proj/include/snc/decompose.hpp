#pragma once

// Branch-structure analysis of contractible graphs with a unique (-1)-vertex,
// their factorization into resolution stages, and the inverse synthesizer.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snc/blowup.hpp"
#include "snc/errors.hpp"
#include "snc/graph.hpp"
#include "snc/hj.hpp"
#include "snc/isomorphism.hpp"
#include "snc/rational.hpp"

namespace snc {

// One resolution stage: the germ (x-c)^k/y^m placed either at a generic point
// of the previous stage's (-1)-curve or at the node it forms with a named
// neighbor. The shift is opaque at the graph level; only tower builders read
// it.
struct FactorizationStage {
    enum class Attach { Generic, AtNode };

    long long k = 1, m = 1;
    Attach attach = Attach::Generic;
    VertexId node;                 // neighbor id, AtNode only
    std::optional<Rational> shift; // c, carried through synthesis untouched

    friend bool operator==(const FactorizationStage&, const FactorizationStage&) = default;
};

inline FactorizationStage generic_stage(long long k, long long m) {
    FactorizationStage s;
    s.k = k;
    s.m = m;
    return s;
}

inline FactorizationStage node_stage(long long k, long long m, VertexId node) {
    FactorizationStage s;
    s.k = k;
    s.m = m;
    s.attach = FactorizationStage::Attach::AtNode;
    s.node = std::move(node);
    return s;
}

// Branch decomposition: branch points E_1..E_{n-1} and linear pieces
// Gamma_1..Gamma_n in build order; each Gamma_i for i < n contains E_i, and
// Gamma_n contains the graph's unique (-1)-vertex.
struct BranchStructure {
    std::vector<VertexId> branch_points;
    std::vector<std::vector<VertexId>> subgraphs; // each in chain order

    friend bool operator==(const BranchStructure&, const BranchStructure&) = default;
};

inline std::vector<VertexId> minus_one_vertices(const WeightedDualGraph& g) {
    std::vector<VertexId> out;
    for (const auto& [id, data] : g.vertices()) {
        if (data.weight == -1)
            out.push_back(id);
    }
    return out;
}

namespace detail {

// Weights of the ids in order, with one vertex optionally replaced by -1.
inline std::vector<int> chain_weights(const WeightedDualGraph& g,
                                      const std::vector<VertexId>& ids,
                                      const std::optional<VertexId>& reset = std::nullopt) {
    std::vector<int> w;
    for (const auto& id : ids)
        w.push_back(reset && *reset == id ? -1 : g.weight(id));
    return w;
}

// Reads a weight list as the resolution chain of y^m/x^k whose axis
// attachment is at the FRONT of the list; the x-side reading therefore starts
// from the back. Throws domain_error if the list is not such a chain; the
// returned pair may have m > k (axis at the first-created end).
inline std::pair<long long, long long> read_exponents_axis_first(const std::vector<int>& w) {
    std::vector<int> x_first(w.rbegin(), w.rend());
    std::size_t minus = x_first.size();
    for (std::size_t i = 0; i < x_first.size(); ++i) {
        if (x_first[i] == -1) {
            require(minus == x_first.size(), "not an HJ chain: several (-1)-vertices");
            minus = i;
        }
    }
    require(minus < x_first.size(), "not an HJ chain: no (-1)-vertex");
    return recover_exponents(HJChain::from_x_side(x_first, minus));
}

// Lemma-style peel of one linear piece whose axis end is the front of ids:
// while the axis meets the first-created curve the bottom stage is a single
// blow-up, which strips the front vertex; the residual chain then names the
// terminal exponents.
inline std::vector<FactorizationStage> peel_stages(std::vector<int> weights) {
    std::vector<FactorizationStage> out;
    for (;;) {
        const auto [k, m] = read_exponents_axis_first(weights);
        if (m <= k) {
            out.push_back(generic_stage(k, m));
            return out;
        }
        out.push_back(generic_stage(1, 1));
        weights.erase(weights.begin());
    }
}

// Chain order of the induced subgraph on ids.
inline std::vector<VertexId> induced_chain_order(const WeightedDualGraph& g,
                                                 const std::set<VertexId>& ids,
                                                 const std::string& what) {
    WeightedDualGraph sub;
    for (const auto& id : ids)
        sub.add_vertex(id, g.weight(id));
    for (const auto& e : g.edges()) {
        if (ids.count(e.first) && ids.count(e.second))
            sub.add_edge(e.first, e.second);
    }
    const auto order = linear_order(sub);
    require(order.has_value(), "outside the branched family: " + what + " is not linear");
    return *order;
}

} // namespace detail

// Branch decomposition of a contractible graph around its unique (-1)-vertex
// e. Rejects graphs outside the iterated-blow-up family: several
// (-1)-vertices, branch points with four or more neighbors, non-linear or
// badly attached pieces.
inline BranchStructure analyze(const WeightedDualGraph& g, const VertexId& e) {
    require(g.has_vertex(e), "no vertex named " + e);
    const auto ones = minus_one_vertices(g);
    require(ones.size() == 1, ones.empty() ? "graph has no (-1)-vertex"
                                           : "graph has several (-1)-vertices");
    require(ones[0] == e, "vertex " + e + " is not the (-1)-vertex");

    std::set<VertexId> branch;
    for (const auto& [id, data] : g.vertices()) {
        const auto deg = g.degree(id);
        require(deg <= 3, "outside the branched family: vertex " + id + " has " +
                              std::to_string(deg) + " neighbors");
        if (deg == 3)
            branch.insert(id);
    }
    require(is_contractible(g), "graph is not contractible");

    const auto all_ids = g.vertex_ids();
    std::set<VertexId> remaining(all_ids.begin(), all_ids.end());

    BranchStructure bs;
    if (branch.empty()) {
        bs.subgraphs.push_back(detail::induced_chain_order(g, remaining, "the graph"));
        return bs;
    }
    std::set<VertexId> open_branch = branch;
    std::vector<std::vector<VertexId>> groups_rev;
    std::vector<VertexId> points_rev;

    // Current piece: the component of e away from all branch points.
    std::set<VertexId> piece = component_of(
        g, e, [&](const VertexId& v) { return remaining.count(v) && !open_branch.count(v); });

    for (;;) {
        auto order = detail::induced_chain_order(g, piece, "a branch piece");

        // Branch points still open and adjacent to this piece.
        std::set<VertexId> adj;
        for (const auto& id : piece) {
            for (const auto& nb : g.neighbors(id)) {
                if (open_branch.count(nb))
                    adj.insert(nb);
            }
        }

        if (adj.empty()) {
            require(open_branch.empty(),
                    "outside the branched family: leftover branch points");
            groups_rev.push_back(order);
            break;
        }
        require(adj.size() == 1,
                "outside the branched family: a piece meets several branch points");
        const VertexId ep = *adj.begin();

        // The open end of the piece must be what the branch point touches.
        std::vector<VertexId> touching;
        for (const auto& nb : g.neighbors(ep)) {
            if (piece.count(nb))
                touching.push_back(nb);
        }
        require(touching.size() == 1,
                "outside the branched family: branch point meets a piece twice");
        require(touching[0] == order.front() || touching[0] == order.back(),
                "outside the branched family: branch point meets a chain interior");
        if (touching[0] == order.back())
            std::reverse(order.begin(), order.end());
        groups_rev.push_back(order);
        points_rev.push_back(ep);

        for (const auto& id : piece)
            remaining.erase(id);
        open_branch.erase(ep);

        // Next piece: the branch point together with its two remaining arms.
        piece = component_of(g, ep, [&](const VertexId& v) {
            return remaining.count(v) && !open_branch.count(v);
        });
    }

    bs.subgraphs.assign(groups_rev.rbegin(), groups_rev.rend());
    bs.branch_points.assign(points_rev.rbegin(), points_rev.rend());

    // Each interior piece, with its branch point reset to -1, must read as a
    // resolution chain from one of its ends; the top piece must read as a
    // resolution chain outright.
    const std::size_t n = bs.subgraphs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const bool top = (i + 1 == n);
        const std::optional<VertexId> reset =
            top ? std::nullopt : std::optional<VertexId>(bs.branch_points[i]);
        auto w = detail::chain_weights(g, bs.subgraphs[i], reset);
        std::vector<int> rev(w.rbegin(), w.rend());
        long long k = 0, m = 0;
        try {
            std::tie(k, m) = detail::read_exponents_axis_first(w);
            if (m > k)
                std::tie(k, m) = detail::read_exponents_axis_first(rev);
        } catch (const domain_error&) {
            std::tie(k, m) = detail::read_exponents_axis_first(rev);
        }
        require(m <= k, "outside the branched family: a piece resolves only " +
                            std::to_string(k) + "," + std::to_string(m));
    }
    return bs;
}

inline BranchStructure analyze(const WeightedDualGraph& g) {
    const auto ones = minus_one_vertices(g);
    require(ones.size() == 1, ones.empty() ? "graph has no (-1)-vertex"
                                           : "graph has several (-1)-vertices");
    return analyze(g, ones[0]);
}

namespace detail {

// Runs one stage on (g, h): places the germ y^m/x^k at the chosen point of
// the (-1)-curve h and blows up until the lift is regular there, mirroring
// resolution_sim with h in the role of the +/-m boundary. Returns the new
// (-1)-curve.
inline VertexId apply_stage(WeightedDualGraph& g, const VertexId& h,
                            const FactorizationStage& s) {
    require(s.k >= 1 && s.m >= 1, "stage exponents must be positive");
    require(std::gcd(s.k, s.m) == 1, "stage exponents are not coprime");
    require(s.m <= s.k, "stage exponent m exceeds k");

    std::map<VertexId, long long> coef;
    for (const auto& id : g.vertex_ids())
        coef[id] = 0;
    coef[h] = -s.m;

    bool germ_virtual = true; // transversal germ curve, not a graph vertex
    VertexId germ_at = h;     // vertex the germ curve currently meets
    if (s.attach == FactorizationStage::Attach::AtNode) {
        require_structure(!s.node.empty(), "node attachment without a node id");
        require_structure(g.has_vertex(s.node), "no vertex named " + s.node);
        require_structure(g.has_edge(h, s.node),
                          "node " + s.node + " is not a neighbor of the (-1)-vertex");
        coef[s.node] = s.k;
        germ_virtual = false;
    }

    std::vector<VertexId> created;
    for (;;) {
        // At most one mixed-sign incidence can exist at any time.
        std::vector<Edge> mixed;
        for (const auto& e : g.edges()) {
            const auto a = coef.at(e.first), b = coef.at(e.second);
            if ((a < 0 && b > 0) || (a > 0 && b < 0))
                mixed.push_back(e);
        }
        const bool virtual_mixed = germ_virtual && coef.at(germ_at) < 0;
        check_internal(mixed.size() + (virtual_mixed ? 1 : 0) <= 1,
                       "stage replay found several mixed-sign incidences");

        if (virtual_mixed) {
            const VertexId fresh = g.fresh_id("E");
            g = outer_blowup(g, germ_at, fresh);
            coef[fresh] = coef.at(germ_at) + s.k;
            germ_at = fresh;
            created.push_back(fresh);
        } else if (!mixed.empty()) {
            const auto [a, b] = mixed.front();
            const VertexId fresh = g.fresh_id("E");
            g = inner_blowup(g, a, b, fresh);
            coef[fresh] = coef.at(a) + coef.at(b);
            created.push_back(fresh);
        } else {
            break;
        }
    }

    VertexId new_h;
    for (const auto& id : created) {
        if (coef.at(id) == 0) {
            check_internal(new_h.empty(), "stage replay left several lifts regular");
            new_h = id;
        }
    }
    check_internal(!new_h.empty() && g.weight(new_h) == -1,
                   "stage replay did not end on a (-1)-curve");
    return new_h;
}

} // namespace detail

// Rebuilds the composite exceptional graph of a stage list. Stage 1 lays down
// the resolution chain of its exponents (vertex ids C1.. from the axis end);
// each later stage blows up at its designated point of the previous
// (-1)-curve (fresh ids E1, E2, ..).
inline WeightedDualGraph synthesize(const std::vector<FactorizationStage>& stages) {
    require(!stages.empty(), "empty stage list");
    require(stages.front().attach == FactorizationStage::Attach::Generic,
            "first stage cannot attach at a node");
    require(stages.front().m <= stages.front().k, "stage exponent m exceeds k");

    const auto first = resolution_chain(stages.front().k, stages.front().m);
    WeightedDualGraph g = chain_to_graph(first);
    VertexId h = "C" + std::to_string(first.minus_one + 1);

    for (std::size_t i = 1; i < stages.size(); ++i)
        h = detail::apply_stage(g, h, stages[i]);

    check_internal(minus_one_vertices(g) == std::vector<VertexId>{h},
                   "synthesis did not end with a unique (-1)-vertex");
    return g;
}

// Stage factorization. Without a hint the bottom piece is read in the unique
// orientation that makes it a minimal resolution chain (maximally merged
// form); a hint names the vertex of the bottom piece where the axis of the
// contraction attaches, forcing that orientation and its single-blow-up
// peels. Output is in build order, all attachments generic.
inline std::vector<FactorizationStage>
factorize(const WeightedDualGraph& g, const std::optional<VertexId>& axis_hint = std::nullopt) {
    require(!g.empty(), "empty graph has no factorization");
    const auto ones = minus_one_vertices(g);
    require(ones.size() == 1, ones.empty() ? "graph has no (-1)-vertex"
                                           : "graph has several (-1)-vertices");
    const auto bs = analyze(g, ones[0]);
    const std::size_t n = bs.subgraphs.size();

    std::vector<FactorizationStage> stages;
    for (std::size_t i = 0; i < n; ++i) {
        const bool top = (i + 1 == n);
        const std::optional<VertexId> reset =
            top ? std::nullopt : std::optional<VertexId>(bs.branch_points[i]);
        auto ids = bs.subgraphs[i];

        if (i > 0) {
            // Axis end forced: the previous branch point touches it.
            const auto& prev = bs.branch_points[i - 1];
            bool front_touches = false, back_touches = false;
            for (const auto& nb : g.neighbors(prev)) {
                front_touches |= nb == ids.front();
                back_touches |= nb == ids.back();
            }
            check_internal(front_touches != back_touches || ids.size() == 1,
                           "piece orientation is ambiguous");
            if (!front_touches)
                std::reverse(ids.begin(), ids.end());
        } else if (axis_hint) {
            require(std::find(ids.begin(), ids.end(), *axis_hint) != ids.end(),
                    "axis hint " + *axis_hint + " is not in the bottom piece");
            require(*axis_hint == ids.front() || *axis_hint == ids.back(),
                    "axis hint " + *axis_hint + " is not a chain end");
            if (*axis_hint == ids.back())
                std::reverse(ids.begin(), ids.end());
        } else {
            // Canonical orientation: the one reading with m <= k, no peels.
            auto w = detail::chain_weights(g, ids, reset);
            bool ok = false;
            try {
                const auto [k, m] = detail::read_exponents_axis_first(w);
                ok = m <= k;
            } catch (const domain_error&) {
            }
            if (!ok)
                std::reverse(ids.begin(), ids.end());
        }

        auto piece_stages =
            detail::peel_stages(detail::chain_weights(g, ids, reset));
        stages.insert(stages.end(), piece_stages.begin(), piece_stages.end());
    }

    require(isomorphic(synthesize(stages), g),
            "outside the branched family: the stage factorization does not replay");
    return stages;
}

// Normal form: generic attachments throughout and every non-final stage with
// m >= 2, so that each stage's (-1)-curve is interior to its chain and the
// next stage forces a branch point. factorize reproduces such lists verbatim.
inline bool is_normalized(const std::vector<FactorizationStage>& stages) {
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const auto& s = stages[i];
        if (s.attach != FactorizationStage::Attach::Generic)
            return false;
        if (s.m > s.k || std::gcd(s.k, s.m) != 1 || s.m < 1)
            return false;
        if (i + 1 < stages.size() && s.m < 2)
            return false;
    }
    return !stages.empty();
}

} // namespace snc
