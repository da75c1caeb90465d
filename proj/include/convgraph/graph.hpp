#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convgraph/dialogue.hpp"
#include "convgraph/types.hpp"

namespace convgraph {

/// A node's position in the alternating user/agent structure. The level is
/// part of node identity so that a user state and an agent state with equal
/// bits never unify.
enum class Level { Start, User, Agent, Final };

std::string level_name(Level level);
Level level_from_name(const std::string& name);

/// Canonical node key: level letter + ':' + bitstring.
std::string node_key(Level level, const BitVec& state);

struct GraphNode {
  Level level = Level::Start;
  BitVec state;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct OutEdge {
  std::string to;
  BitVec act;  // act segment of the destination state
  std::int64_t freq = 0;

  friend bool operator==(const OutEdge&, const OutEdge&) = default;
};

struct GraphStats {
  std::int64_t edges = 0;
  double repetition = 0.0;  // % of edges with freq > 1
  std::int64_t nodes = 0;
  double mnd = 0.0;  // mean outgoing degree
  std::int64_t n_dialogues = 0;
};

/// Directed graph of dialogue states with frequency-weighted edges.
/// Nodes and edges live in ordered maps, so iteration order is canonical
/// and serialization is deterministic.
class ConvGraph {
 public:
  ConvGraph() = default;

  /// Start-only graph over the given vocabulary widths.
  static ConvGraph empty(const Vocabulary& vocab);
  static ConvGraph empty(std::size_t act_size, std::size_t state_size,
                         const std::string& vocab_hash);

  const std::string& start() const { return start_; }
  const std::string& vocab_hash() const { return vocab_hash_; }
  std::size_t act_size() const { return act_size_; }
  std::size_t state_size() const { return state_size_; }

  const std::map<std::string, GraphNode>& nodes() const { return nodes_; }
  bool has_node(const std::string& key) const;
  const GraphNode& node(const std::string& key) const;

  /// Outgoing edges in canonical (to, act) order.
  std::span<const OutEdge> out_edges(const std::string& key) const;

  std::int64_t edge_count() const;
  std::int64_t total_frequency() const;

  /// Adds (or merges) the edge from -> to, creating nodes as needed.
  /// The act label is the act segment of `to_state`.
  void add_transition(Level from_level, const BitVec& from_state,
                      Level to_level, const BitVec& to_state,
                      std::int64_t freq = 1);

  friend bool operator==(const ConvGraph&, const ConvGraph&) = default;

 private:
  std::size_t act_size_ = 0;
  std::size_t state_size_ = 0;
  std::string vocab_hash_;
  std::string start_;
  std::map<std::string, GraphNode> nodes_;
  std::map<std::string, std::vector<OutEdge>> adj_;
};

/// Algorithm: walk each dialogue from the all-zeros start state, unifying
/// identical (level, state) nodes and accumulating edge frequencies.
/// append_final adds one transition per dialogue into the shared FINAL sink.
ConvGraph build_graph(std::span<const Corpus> corpora, const Vocabulary& vocab,
                      bool append_final = true);

GraphStats graph_stats(const ConvGraph& g);
GraphStats graph_stats(const ConvGraph& g, std::span<const Corpus> corpora);

/// Union of node sets, sum of edge frequencies. All inputs must share a
/// vocabulary (VocabMismatch otherwise).
ConvGraph merge_graphs(std::span<const ConvGraph> graphs);

/// All outgoing act vectors with frequencies, sorted by frequency
/// descending then canonical act order. Throws NodeNotFound.
std::vector<std::pair<BitVec, std::int64_t>> valid_actions(
    const ConvGraph& g, const std::string& node_id);

// --- persistence -----------------------------------------------------------

std::string graph_to_json(const ConvGraph& g);
ConvGraph graph_from_json(const std::string& text);
ConvGraph load_graph(const std::string& path);
void save_graph(const ConvGraph& g, const std::string& path);

/// Plain DOT rendering, act labels on edges (decoded through vocab when
/// given, bitstrings otherwise).
std::string graph_to_dot(const ConvGraph& g, const Vocabulary* vocab = nullptr);

}  // namespace convgraph
