#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snc/errors.hpp"

namespace snc {

using VertexId = std::string;
using Edge = std::pair<VertexId, VertexId>; // stored with first <= second

inline Edge make_edge(VertexId a, VertexId b) {
    if (b < a)
        std::swap(a, b);
    return {std::move(a), std::move(b)};
}

struct VertexData {
    int weight = 0; // self-intersection number
    std::optional<std::string> label;

    friend bool operator==(const VertexData&, const VertexData&) = default;
};

// Weighted dual graph of a complete SNC curve: vertices are irreducible
// components carrying their self-intersection, edges are the transverse
// intersection points. Multi-edges are allowed, self-loops are not.
// Operations never mutate their input; they return rewritten copies.
class WeightedDualGraph {
public:
    WeightedDualGraph() = default;

    void add_vertex(const VertexId& id, int weight,
                    std::optional<std::string> label = std::nullopt) {
        require_structure(!vertices_.count(id), "duplicate vertex id: " + id);
        vertices_[id] = VertexData{weight, std::move(label)};
    }

    void add_edge(const VertexId& a, const VertexId& b) {
        require_structure(a != b, "self-loop edge on " + a + " violates normal crossings");
        require_structure(vertices_.count(a), "edge endpoint names missing vertex: " + a);
        require_structure(vertices_.count(b), "edge endpoint names missing vertex: " + b);
        edges_.insert(make_edge(a, b));
    }

    bool has_vertex(const VertexId& id) const { return vertices_.count(id) != 0; }

    bool has_edge(const VertexId& a, const VertexId& b) const {
        return edges_.count(make_edge(a, b)) != 0;
    }

    std::size_t edge_multiplicity(const VertexId& a, const VertexId& b) const {
        return edges_.count(make_edge(a, b));
    }

    int weight(const VertexId& id) const { return vertex(id).weight; }

    void set_weight(const VertexId& id, int w) {
        require_structure(vertices_.count(id), "unknown vertex: " + id);
        vertices_[id].weight = w;
    }

    const VertexData& vertex(const VertexId& id) const {
        const auto it = vertices_.find(id);
        require_structure(it != vertices_.end(), "unknown vertex: " + id);
        return it->second;
    }

    void remove_vertex(const VertexId& id) {
        require_structure(vertices_.count(id), "unknown vertex: " + id);
        for (auto it = edges_.begin(); it != edges_.end();) {
            if (it->first == id || it->second == id)
                it = edges_.erase(it);
            else
                ++it;
        }
        vertices_.erase(id);
    }

    void remove_edge(const VertexId& a, const VertexId& b) {
        const auto it = edges_.find(make_edge(a, b));
        require_structure(it != edges_.end(), "no edge " + a + "--" + b);
        edges_.erase(it);
    }

    // Neighbors with multiplicity, sorted by id.
    std::vector<VertexId> neighbors(const VertexId& id) const {
        std::vector<VertexId> out;
        for (const auto& e : edges_) {
            if (e.first == id)
                out.push_back(e.second);
            else if (e.second == id)
                out.push_back(e.first);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t degree(const VertexId& id) const { return neighbors(id).size(); }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    // Deterministic (id-sorted) views.
    const std::map<VertexId, VertexData>& vertices() const { return vertices_; }
    const std::multiset<Edge>& edges() const { return edges_; }

    std::vector<VertexId> vertex_ids() const {
        std::vector<VertexId> out;
        out.reserve(vertices_.size());
        for (const auto& [id, data] : vertices_)
            out.push_back(id);
        return out;
    }

    long long weight_sum() const {
        long long s = 0;
        for (const auto& [id, data] : vertices_)
            s += data.weight;
        return s;
    }

    // Fresh id of the form <stem><counter> not colliding with existing ids.
    VertexId fresh_id(const std::string& stem) const {
        for (std::size_t i = 1;; ++i) {
            VertexId candidate = stem + std::to_string(i);
            if (!vertices_.count(candidate))
                return candidate;
        }
    }

    friend bool operator==(const WeightedDualGraph&, const WeightedDualGraph&) = default;

private:
    std::map<VertexId, VertexData> vertices_;
    std::multiset<Edge> edges_;
};

// Connected component of `start` within the subgraph induced by keeping only
// vertices for which `keep` returns true.
template <typename Pred>
std::set<VertexId> component_of(const WeightedDualGraph& g, const VertexId& start, Pred keep) {
    std::set<VertexId> seen;
    if (!keep(start))
        return seen;
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const auto& n : g.neighbors(v)) {
            if (keep(n) && seen.insert(n).second)
                stack.push_back(n);
        }
    }
    return seen;
}

inline bool is_connected(const WeightedDualGraph& g) {
    if (g.empty())
        return true;
    const auto comp =
        component_of(g, g.vertices().begin()->first, [](const VertexId&) { return true; });
    return comp.size() == g.vertex_count();
}

// A linear graph: connected, acyclic, every vertex of degree <= 2. Returns the
// vertex ids in path order (smaller endpoint id first) or nullopt.
inline std::optional<std::vector<VertexId>> linear_order(const WeightedDualGraph& g) {
    if (g.empty())
        return std::vector<VertexId>{};
    if (!is_connected(g) || g.edge_count() + 1 != g.vertex_count())
        return std::nullopt;
    std::vector<VertexId> ends;
    for (const auto& [id, data] : g.vertices()) {
        const auto d = g.degree(id);
        if (d > 2)
            return std::nullopt;
        if (d <= 1)
            ends.push_back(id);
    }
    if (g.vertex_count() == 1)
        return std::vector<VertexId>{g.vertices().begin()->first};
    if (ends.size() != 2)
        return std::nullopt;
    std::sort(ends.begin(), ends.end());
    std::vector<VertexId> order{ends[0]};
    while (order.size() < g.vertex_count()) {
        bool advanced = false;
        for (const auto& n : g.neighbors(order.back())) {
            if (order.size() >= 2 && n == order[order.size() - 2])
                continue;
            order.push_back(n);
            advanced = true;
            break;
        }
        if (!advanced)
            return std::nullopt;
    }
    return order;
}

} // namespace snc
