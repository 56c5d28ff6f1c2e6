#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gossipsim/graph.hpp"
#include "gossipsim/metrics.hpp"
#include "gossipsim/rng.hpp"

namespace gossipsim {

enum class Variant {
    Push,
    Pull,
    PushPull,
    DifferentialPush,
    Fptp,
    AdaptivePush,
    AdaptivePull,
    AdaptiveFptp,
};

// Variants that switch from push mode to pull mode at a transition round.
bool is_fptp(Variant v);

// Kebab-case protocol names used by the CLI and file outputs.
std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

// Transition round with the lowest expected cost: round(log2 n), at least 1.
std::uint32_t default_tr(std::size_t n);

// What the eligible nodes do in one synchronous round.
enum class RoundMode { Push, Pull, PushPull, DifferentialPush, AdaptivePush, AdaptivePull };

// Engine used by `variant` in round `round` (1-based): FPTP variants push
// for round < tr and pull from round tr on; everything else is fixed.
RoundMode round_mode(Variant variant, std::uint32_t tr, std::uint32_t round);

struct SimConfig {
    Variant variant = Variant::Push;
    std::uint32_t tr = 0;  // FPTP variants only; 0 = default_tr(n)
    InitiatorPolicy initiator = InitiatorPolicy::min_degree();
    std::uint64_t max_rounds = 0;  // 0 = 10 * n
    std::uint64_t seed = 0;
};

struct NodeStatus {
    bool spreader = false;
    bool has_transmitted = false;
    std::optional<std::uint32_t> informed_round;
    std::uint32_t pull_attempts = 0;
};

// One call as seen by the optional trace hook. Spreader flags reflect the
// state at the start of the round the call was made in.
struct CallEvent {
    std::uint32_t round = 0;
    RoundMode mode = RoundMode::Push;
    NodeId caller = 0;
    NodeId target = 0;
    bool caller_was_spreader = false;
    bool target_was_spreader = false;
    bool targeted_rich = false;  // deterministic rich-neighbour pick
};

// Round-synchronous simulation state. All decisions in a round are based
// on round-start state; deliveries are applied when the round ends, so a
// node informed in round r first acts in round r + 1.
class SimState {
public:
    // Seeds the RNG from cfg.seed and informs the initiator chosen by
    // cfg.initiator. A single-node graph accepts an empty rich table.
    SimState(const Graph& g, const RichNeighbourTable& rich, const SimConfig& cfg);

    // Starts from an explicit spreader set (may be empty) instead of a
    // selected initiator.
    SimState(const Graph& g, const RichNeighbourTable& rich, const SimConfig& cfg,
             const std::vector<NodeId>& initial_spreaders);

    // Executes the next round using the variant's mode schedule.
    RoundMetrics step();

    // Executes one round in an explicit mode.
    RoundMetrics run_round(RoundMode mode);

    bool complete() const { return spreader_list_.size() == graph_->node_count(); }
    std::uint32_t current_round() const { return round_; }
    std::size_t spreader_count() const { return spreader_list_.size(); }
    NodeStatus status(NodeId v) const;
    NodeId initiator() const { return initiator_; }
    std::uint32_t tr() const { return tr_; }
    std::uint64_t max_rounds() const { return max_rounds_; }

    // When set, every call made by any node is appended to *sink.
    void set_trace(std::vector<CallEvent>* sink) { trace_ = sink; }

private:
    void init_common(const SimConfig& cfg);
    void promote(NodeId v, std::uint32_t round);
    NodeId pick_random_neighbour(NodeId v);

    const Graph* graph_;
    const RichNeighbourTable* rich_;
    Variant variant_;
    std::uint32_t tr_ = 1;
    std::uint64_t max_rounds_ = 0;
    Rng rng_;
    std::uint32_t round_ = 0;  // completed rounds

    std::vector<std::uint8_t> spreader_;
    std::vector<std::uint8_t> transmitted_;
    std::vector<std::uint32_t> informed_round_;
    std::vector<std::uint32_t> pull_attempts_;
    std::vector<NodeId> spreader_list_;  // in order of becoming informed
    std::vector<std::size_t> diff_fanout_;  // differential push fan-out per node
    std::vector<NodeId> promoted_;       // per-round delivery buffer
    std::vector<NodeId> scratch_;
    std::vector<CallEvent>* trace_ = nullptr;
    NodeId initiator_ = 0;
};

// Runs rounds 1, 2, ... until every node is a spreader or max_rounds is
// reached (completed = false in that case). Identical (graph, cfg) give a
// bit-identical result.
RunResult run(const Graph& g, const RichNeighbourTable& rich, const SimConfig& cfg,
              std::vector<CallEvent>* trace = nullptr);

// Fan-out of the differential push: degree(v) / mean neighbour degree,
// rounded to nearest and clamped to [1, degree(v)].
std::size_t differential_fanout(const Graph& g, NodeId v);

}  // namespace gossipsim
