#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "gossipsim/graph.hpp"

namespace gossipsim {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

struct RoundMetrics {
    std::uint32_t round = 0;  // 1-based
    std::uint64_t spreaders_begin = 0;
    std::uint64_t fresh = 0;
    std::uint64_t calls = 0;
    double cost = kInfiniteCost;
};

// Calls made in the round per fresh spreader produced. Infinite when the
// round informed nobody; 1 at best. In push mode calls equal the spreaders
// of the previous round, so this is the classic spreaders/fresh ratio.
double round_cost(std::uint64_t calls, std::uint64_t fresh);

struct RunResult {
    std::vector<RoundMetrics> rounds;
    std::size_t n = 0;
    std::uint64_t total_rounds = 0;
    bool completed = false;
    std::uint64_t total_calls = 0;
    // Mean over the finite per-round costs; infinite rounds are excluded
    // from the mean but still counted in total_rounds. 0 for a run with no
    // rounds, infinite when rounds happened but none informed anybody.
    double mean_round_cost = 0.0;
    // total_calls / (n - 1); absent for n < 2.
    std::optional<double> normalized_cost;
    NodeId initiator = 0;
    std::size_t initiator_degree = 0;
};

// Totals and cost summaries for one run. Round indices must be consecutive
// from 1. completed / initiator fields are left for the caller to fill.
RunResult summarize_run(std::vector<RoundMetrics> rounds, std::size_t n);

struct AggregateResult {
    std::size_t run_count = 0;
    double mean_cost = 0.0;  // over per-run mean_round_cost
    double std_cost = 0.0;
    std::optional<double> mean_normalized_cost;
    std::optional<double> std_normalized_cost;
    double mean_rounds = 0.0;
    double std_rounds = 0.0;
    // Mean spreader count at the end of round r+1 across runs; runs shorter
    // than the longest one are padded with n.
    std::vector<double> mean_spreaders;
};

// Arithmetic means and sample standard deviations across runs. All runs
// must share n; the input must be non-empty. Order-independent.
AggregateResult aggregate(std::span<const RunResult> results);

}  // namespace gossipsim
