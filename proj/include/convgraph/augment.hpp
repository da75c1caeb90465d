#pragma once

#include <cstdint>
#include <vector>

#include "convgraph/graph.hpp"
#include "convgraph/instances.hpp"

namespace convgraph {

struct MfsConfig {
  int n = 4;
  int max_histories_per_node = 64;
  bool combine_with_base = false;
};

/// Most Frequent Sampling. For every decision node (a node from which the
/// agent acts next), pairs the most frequent outgoing agent act with up to
/// max_histories_per_node backward histories of length n, enumerated
/// depth-first expanding predecessor edges in descending frequency.
/// Output is globally deduplicated. Throws NoAgentNodes when the graph has
/// no decision node.
InstanceSet mfs_augment(const ConvGraph& g, const MfsConfig& cfg);

/// Subset of `mfs` whose (history, target) pairs occur in dev or test.
/// When `base` is given, pairs already present in base are dropped as
/// not novel. All sets must share n and vocabulary (ConfigMismatch).
InstanceSet oracle_augment(const InstanceSet& mfs, const InstanceSet& dev,
                           const InstanceSet& test,
                           const InstanceSet* base = nullptr);

/// Named strategy alias for dedupe.
InstanceSet downsample(const InstanceSet& s);

/// Emits factor * |corpus| dialogues: the originals plus seeded, sampled
/// ordered pairs concatenated back to back. The second dialogue keeps its
/// own belief states (full reset; nothing carries over the junction).
Corpus duplicate_dialogues(const Corpus& corpus, int factor,
                           std::uint64_t seed);

}  // namespace convgraph
