#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gossipsim/rng.hpp"

namespace gossipsim {

using NodeId = std::uint32_t;

// Static undirected graph stored as sorted adjacency lists.
// No self-loops, no parallel edges; symmetric by construction.
class Graph {
public:
    explicit Graph(std::size_t node_count);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(NodeId v) const { return neighbours(v).size(); }
    std::span<const NodeId> neighbours(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

    // Inserts an undirected edge, keeping both lists sorted.
    void add_edge(NodeId u, NodeId v);

    bool is_connected() const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;

private:
    void check_node(NodeId v) const;

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Preferential-attachment generator parameters. m0 == 0 selects the
// default seed core of m + 1 nodes.
struct BaParams {
    std::size_t n = 0;
    std::size_t m = 2;
    std::size_t m0 = 0;
    std::uint64_t seed = 0;

    std::size_t resolved_m0() const { return m0 == 0 ? m + 1 : m0; }
};

// Stock parameters (m = 2, complete core of m + 1 nodes), with m clamped
// so that tiny n stay generable. Requires n >= 2.
BaParams default_ba_params(std::size_t n, std::uint64_t seed);

// Barabasi-Albert graph: complete core on m0 nodes, then every new node
// attaches to m distinct existing nodes sampled proportionally to degree.
// Pure function of params: identical params give identical adjacency.
Graph generate_ba(const BaParams& params);

// Per-node pointer to one neighbour of maximum degree.
class RichNeighbourTable {
public:
    RichNeighbourTable() = default;
    explicit RichNeighbourTable(std::vector<NodeId> rich) : rich_(std::move(rich)) {}

    NodeId rich(NodeId v) const { return rich_.at(v); }
    std::size_t size() const { return rich_.size(); }

private:
    std::vector<NodeId> rich_;
};

// Highest-degree neighbour of every node, ties broken by smallest id.
// The topology is static, so the table is computed once and never changes.
// Throws if any node is isolated.
RichNeighbourTable build_rich_table(const Graph& g);

enum class InitiatorKind { MinDegree, MaxDegree, UniformRandom, Explicit, OfDegree };

struct InitiatorPolicy {
    InitiatorKind kind = InitiatorKind::MinDegree;
    NodeId node = 0;         // Explicit
    std::size_t degree = 0;  // OfDegree

    static InitiatorPolicy min_degree() { return {}; }
    static InitiatorPolicy max_degree() { return {InitiatorKind::MaxDegree}; }
    static InitiatorPolicy uniform_random() { return {InitiatorKind::UniformRandom}; }
    static InitiatorPolicy explicit_node(NodeId v) { return {InitiatorKind::Explicit, v}; }
    static InitiatorPolicy of_degree(std::size_t k) { return {InitiatorKind::OfDegree, 0, k}; }
};

// MinDegree/MaxDegree return the smallest id among extremal-degree nodes;
// OfDegree samples uniformly among nodes of degree exactly k and throws if
// there is none; Explicit range-checks.
NodeId select_initiator(const Graph& g, const InitiatorPolicy& policy, Rng& rng);

// Raised by load_edge_list with the offending 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text format: "# nodes=N edges=E" header, then one "u v" line per edge
// with u < v. Lines starting with '#' after the header are skipped.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

}  // namespace gossipsim
