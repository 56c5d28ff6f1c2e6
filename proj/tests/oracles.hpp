#pragma once

// Independent oracles used by the unit and acceptance suites. Everything
// here recomputes results from first principles and stays off the code
// paths it checks.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gossipsim/graph.hpp"
#include "gossipsim/metrics.hpp"
#include "gossipsim/protocol.hpp"

namespace gossipsim::testing {

// Union-find connectivity, independent of Graph::is_connected.
bool uf_connected(const Graph& g);

// Argmax-by-degree-then-min-id rich table, by plain scan.
std::vector<NodeId> brute_force_rich(const Graph& g);

struct ReplayResult {
    std::vector<RoundMetrics> rounds;
    std::uint64_t total_calls = 0;
    bool completed = false;
    std::string violation;  // empty when the log obeys every protocol rule
};

// Replays a call log against the topology, recomputing node statuses and
// per-round metrics, and checks the protocol rules round by round:
// push-family callers are round-start spreaders calling the right number
// of times, pull-family callers are ignorants (spreaders stay silent),
// push-pull has exactly one call per node, fresh spreaders push to their
// rich neighbour first, and adaptive pull alternates rich/random picks.
ReplayResult replay_trace(const Graph& g, std::span<const NodeId> rich,
                          std::span<const NodeId> initial_spreaders,
                          std::span<const CallEvent> trace);

// Exact completion-round distribution of a synchronous pull-family process
// on a small graph, by enumerating every joint choice of the ignorant
// nodes. Returns P(T = r) for r = 1..max_rounds; mode must be Pull or
// AdaptivePull (rich may be empty for plain Pull).
std::vector<double> exact_completion_distribution(const Graph& g,
                                                  std::span<const NodeId> initial_spreaders,
                                                  RoundMode mode,
                                                  std::span<const NodeId> rich,
                                                  std::size_t max_rounds);

}  // namespace gossipsim::testing
