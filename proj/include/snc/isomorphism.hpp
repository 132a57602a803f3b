#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "snc/graph.hpp"

namespace snc {
namespace detail {

inline bool is_forest(const WeightedDualGraph& g) {
    // A forest has no multi-edges and #edges = #vertices - #components.
    std::set<Edge> distinct(g.edges().begin(), g.edges().end());
    if (distinct.size() != g.edge_count())
        return false;
    std::size_t components = 0;
    std::set<VertexId> seen;
    for (const auto& [id, data] : g.vertices()) {
        if (seen.count(id))
            continue;
        ++components;
        for (const auto& v : component_of(g, id, [](const VertexId&) { return true; }))
            seen.insert(v);
    }
    return g.edge_count() + components == g.vertex_count();
}

// Canonical encoding of the tree rooted at `v`: weight, then the sorted child
// encodings. Equal encodings <=> isomorphic rooted weighted trees.
inline std::string ahu_encode(const WeightedDualGraph& g, const VertexId& v,
                              const VertexId& parent) {
    std::vector<std::string> kids;
    for (const auto& n : g.neighbors(v)) {
        if (n != parent)
            kids.push_back(ahu_encode(g, n, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + std::to_string(g.weight(v));
    for (const auto& k : kids)
        out += k;
    out += ")";
    return out;
}

// Center(s) of a tree: peel leaves until <= 2 vertices remain.
inline std::vector<VertexId> tree_centers(const WeightedDualGraph& g,
                                          const std::set<VertexId>& comp) {
    std::map<VertexId, std::size_t> deg;
    for (const auto& v : comp) {
        std::size_t d = 0;
        for (const auto& n : g.neighbors(v))
            d += comp.count(n);
        deg[v] = d;
    }
    std::set<VertexId> alive(comp);
    while (alive.size() > 2) {
        std::vector<VertexId> leaves;
        for (const auto& v : alive) {
            if (deg[v] <= 1)
                leaves.push_back(v);
        }
        for (const auto& v : leaves) {
            alive.erase(v);
            for (const auto& n : g.neighbors(v)) {
                if (alive.count(n))
                    --deg[n];
            }
        }
    }
    return {alive.begin(), alive.end()};
}

inline std::string canonical_tree_component(const WeightedDualGraph& g,
                                            const std::set<VertexId>& comp) {
    const auto centers = tree_centers(g, comp);
    std::string best;
    for (const auto& c : centers) {
        std::string enc = ahu_encode(g, c, c);
        if (best.empty() || enc < best)
            best = std::move(enc);
    }
    return best;
}

// Fallback for graphs with cycles or multi-edges: minimal interleaved
// adjacency encoding over color-respecting orderings, with prefix pruning.
struct CanonicalSearch {
    const std::vector<int>& weights;
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& color;
    std::vector<int> best;
    bool have_best = false;

    void search(std::vector<std::size_t>& order, std::vector<int>& code,
                std::vector<bool>& used) {
        const std::size_t n = weights.size();
        if (have_best) {
            for (std::size_t i = 0; i < code.size(); ++i) {
                if (code[i] < best[i])
                    break;
                if (code[i] > best[i])
                    return;
            }
        }
        if (order.size() == n) {
            if (!have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        int pick = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!used[i] && (pick == -1 || color[i] < pick))
                pick = color[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || color[i] != pick)
                continue;
            const std::size_t before = code.size();
            code.push_back(weights[i]);
            for (const std::size_t j : order)
                code.push_back(adj[j][i]);
            order.push_back(i);
            used[i] = true;
            search(order, code, used);
            used[i] = false;
            order.pop_back();
            code.resize(before);
        }
    }
};

inline std::vector<int> refine_colors(const std::vector<int>& weights,
                                      const std::vector<std::vector<int>>& adj) {
    const std::size_t n = weights.size();
    std::vector<int> color(n, 0);
    {
        std::map<int, int> ids;
        for (const int w : weights)
            ids.emplace(w, 0);
        int next = 0;
        for (auto& [w, id] : ids)
            id = next++;
        for (std::size_t i = 0; i < n; ++i)
            color[i] = ids[weights[i]];
    }
    for (;;) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> around;
            for (std::size_t j = 0; j < n; ++j) {
                for (int e = 0; e < adj[i][j]; ++e)
                    around.push_back(color[j]);
            }
            std::sort(around.begin(), around.end());
            sig[i] = {color[i], std::move(around)};
        }
        std::map<std::pair<int, std::vector<int>>, int> ids;
        for (const auto& key : sig)
            ids.emplace(key, 0);
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        std::vector<int> fresh(n);
        for (std::size_t i = 0; i < n; ++i)
            fresh[i] = ids[sig[i]];
        if (fresh == color)
            return color;
        color = std::move(fresh);
    }
}

inline std::string canonical_general(const WeightedDualGraph& g) {
    const auto ids = g.vertex_ids();
    const std::size_t n = ids.size();
    std::vector<int> weights(n);
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        index[ids[i]] = i;
        weights[i] = g.weight(ids[i]);
    }
    for (const auto& e : g.edges()) {
        ++adj[index[e.first]][index[e.second]];
        ++adj[index[e.second]][index[e.first]];
    }
    const auto color = refine_colors(weights, adj);
    CanonicalSearch cs{weights, adj, color, {}, false};
    std::vector<std::size_t> order;
    std::vector<int> code;
    std::vector<bool> used(n, false);
    cs.search(order, code, used);
    std::string out;
    for (const int v : cs.best) {
        out += std::to_string(v);
        out += ',';
    }
    return out;
}

} // namespace detail

// Canonical form, equal iff the weighted multigraphs are isomorphic (labels
// ignored). Trees and forests (the graphs this calculus produces) use linear
// AHU encoding; anything with a cycle falls back to a small exhaustive search.
inline std::string canonical_form(const WeightedDualGraph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + ";";
    if (detail::is_forest(g)) {
        std::vector<std::string> parts;
        std::set<VertexId> seen;
        for (const auto& [id, data] : g.vertices()) {
            if (seen.count(id))
                continue;
            const auto comp = component_of(g, id, [](const VertexId&) { return true; });
            seen.insert(comp.begin(), comp.end());
            parts.push_back(detail::canonical_tree_component(g, comp));
        }
        std::sort(parts.begin(), parts.end());
        out += "forest:";
        for (const auto& p : parts)
            out += p;
        return out;
    }
    return out + "general:" + detail::canonical_general(g);
}

inline bool isomorphic(const WeightedDualGraph& a, const WeightedDualGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace snc
