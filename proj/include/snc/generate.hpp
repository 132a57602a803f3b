#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "snc/blowup.hpp"
#include "snc/graph.hpp"

namespace snc {

// Deterministic RNG wrapper. Draws go through rejection sampling rather than
// std::uniform_int_distribution, whose output is implementation-defined; the
// same seed must yield the same data on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            const std::uint64_t raw = engine_();
            if (raw < limit)
                return raw % bound;
        }
    }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

// Random exceptional graph: the history of a point blow-up followed by at most
// `max_extra` further inner/outer blow-ups. Such graphs are contractible by
// construction.
inline WeightedDualGraph random_blowup_graph(Rng& rng, std::size_t max_extra) {
    WeightedDualGraph g;
    g.add_vertex("v1", -1);
    std::size_t next = 2;
    const std::size_t ops = rng.below(max_extra + 1);
    for (std::size_t i = 0; i < ops; ++i) {
        const VertexId fresh = "v" + std::to_string(next++);
        const bool inner = g.edge_count() > 0 && rng.coin();
        if (inner) {
            const auto pick = rng.below(g.edge_count());
            auto it = g.edges().begin();
            std::advance(it, pick);
            g = inner_blowup(g, it->first, it->second, fresh);
        } else {
            const auto ids = g.vertex_ids();
            g = outer_blowup(g, ids[rng.below(ids.size())], fresh);
        }
    }
    return g;
}

// One uniformly random maximal contraction order. Returns true if it reached
// the empty graph.
inline bool random_contraction_reaches_empty(const WeightedDualGraph& g, Rng& rng) {
    WeightedDualGraph cur = g;
    while (!cur.empty()) {
        std::vector<VertexId> targets;
        for (const auto& [id, data] : cur.vertices()) {
            if (can_blow_down(cur, id))
                targets.push_back(id);
        }
        if (targets.empty())
            return false;
        cur = blow_down(cur, targets[rng.below(targets.size())]);
    }
    return true;
}

} // namespace snc
