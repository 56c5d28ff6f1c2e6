#pragma once

// Shared helpers for the test suites.

#include <span>
#include <vector>

#include "gossipsim/graph.hpp"
#include "gossipsim/metrics.hpp"

namespace gossipsim::testing {

// Star K_{1,k}: node 0 is the centre, 1..k are leaves.
inline Graph make_star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// Path 0-1-2-...-(n-1).
inline Graph make_path(std::size_t n) {
    Graph g(n);
    for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Cycle on n >= 3 nodes.
inline Graph make_cycle(std::size_t n) {
    Graph g(n);
    for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(static_cast<NodeId>(n - 1), 0);
    return g;
}

inline Graph make_complete(std::size_t n) {
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline std::vector<std::vector<NodeId>> adjacency_snapshot(const Graph& g) {
    std::vector<std::vector<NodeId>> adj(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto nb = g.neighbours(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    return adj;
}

inline bool same_rounds(std::span<const RoundMetrics> a, std::span<const RoundMetrics> b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].round != b[i].round || a[i].spreaders_begin != b[i].spreaders_begin ||
            a[i].fresh != b[i].fresh || a[i].calls != b[i].calls)
            return false;
        const bool inf_a = a[i].cost == kInfiniteCost;
        const bool inf_b = b[i].cost == kInfiniteCost;
        if (inf_a != inf_b) return false;
        if (!inf_a && a[i].cost != b[i].cost) return false;
    }
    return true;
}

inline bool same_run(const RunResult& a, const RunResult& b) {
    return a.n == b.n && a.total_rounds == b.total_rounds && a.completed == b.completed &&
           a.total_calls == b.total_calls && a.initiator == b.initiator &&
           a.initiator_degree == b.initiator_degree &&
           a.mean_round_cost == b.mean_round_cost && a.normalized_cost == b.normalized_cost &&
           same_rounds(a.rounds, b.rounds);
}

}  // namespace gossipsim::testing
