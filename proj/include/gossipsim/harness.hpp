#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gossipsim/graph.hpp"
#include "gossipsim/metrics.hpp"
#include "gossipsim/protocol.hpp"

namespace gossipsim {

enum class GraphMode {
    RegeneratePerRun,  // fresh topology per run
    FixedGraph,        // one topology shared by every run
};

struct ExperimentSpec {
    BaParams ba;  // ba.seed is ignored; graph seeds derive from base_seed
    std::size_t runs = 1000;
    GraphMode graph_mode = GraphMode::RegeneratePerRun;
    std::uint64_t base_seed = 0;
    unsigned jobs = 1;  // worker threads; emitted numbers do not depend on it
};

std::uint64_t graph_seed_for_run(const ExperimentSpec& spec, std::size_t run_index);
std::uint64_t sim_seed_for_run(const ExperimentSpec& spec, std::size_t run_index);
Graph graph_for_run(const ExperimentSpec& spec, std::size_t run_index);

// Monte-Carlo repetition of one configuration. Run i draws its RNG streams
// from (base_seed, i) only, so results are reproducible and independent of
// execution order.
AggregateResult repeat_runs(const ExperimentSpec& spec, const SimConfig& cfg_template);

struct SweepRow {
    std::uint32_t tr = 0;
    double mean_cost = 0.0;
    double std_cost = 0.0;
    double mean_rounds = 0.0;
    double std_rounds = 0.0;
};

// One row per transition round in [tr_min, tr_max]. Run i keeps the same
// graph and initiator seeds across all TR values, so rows are paired.
// variant must be Fptp or AdaptiveFptp.
std::vector<SweepRow> sweep_tr(const ExperimentSpec& spec, const SimConfig& cfg_template,
                               Variant variant, std::uint32_t tr_min, std::uint32_t tr_max);

// TR of minimal mean cost; ties break towards the smaller TR.
std::uint32_t find_optimal_tr(std::span<const SweepRow> rows);

struct TableRow {
    std::size_t n = 0;
    double push_cost = 0.0, push_rounds = 0.0;
    double pull_cost = 0.0, pull_rounds = 0.0;
    double fptp_cost = 0.0, fptp_rounds = 0.0;
    double afptp_cost = 0.0, afptp_rounds = 0.0;
};

// Protocol comparison at several network sizes: Push, Pull, FPTP and
// Adaptive FPTP at TR = default_tr(n), min-degree initiator, `runs` runs
// each. The four variants share graph seeds per run index. m empty uses
// the per-size default attachment.
std::vector<TableRow> comparison_table(std::span<const std::size_t> sizes, std::size_t runs,
                                       std::uint64_t base_seed,
                                       std::optional<std::size_t> m = std::nullopt,
                                       unsigned jobs = 1);

}  // namespace gossipsim
