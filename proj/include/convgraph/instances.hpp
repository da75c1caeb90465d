#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "convgraph/dialogue.hpp"
#include "convgraph/types.hpp"

namespace convgraph {

/// One supervised example: the n most recent dialogue states (most recent
/// first, zero-padded past the dialogue start) and the agent's act vector.
struct TrainingInstance {
  std::vector<BitVec> history;
  BitVec target;

  friend bool operator==(const TrainingInstance&,
                         const TrainingInstance&) = default;

  /// Stable key over (history, target); used by dedupe and set operations.
  std::string key() const;
};

struct InstanceSet {
  std::vector<TrainingInstance> instances;
  int n = 0;
  std::string vocab_hash;
  /// Free-form metadata written into the file header (strategy, config).
  std::map<std::string, std::string> meta;

  friend bool operator==(const InstanceSet&, const InstanceSet&) = default;

  std::size_t size() const { return instances.size(); }
};

/// One instance per agent turn; history covers both user and agent states.
/// n must be in [1, 8].
InstanceSet extract_instances(const Corpus& corpus, const Vocabulary& vocab,
                              int n);

/// Keeps the first occurrence of every (history, target) pair.
InstanceSet dedupe(const InstanceSet& s);

std::size_t unique_count(const InstanceSet& s);

/// Concatenation; inputs must agree on n and vocab_hash (ConfigMismatch).
InstanceSet concat_instances(const InstanceSet& a, const InstanceSet& b);

// --- persistence -----------------------------------------------------------

/// JSONL with a one-line header {"n":…, "vocab_hash":…, …meta}.
std::string instances_to_jsonl(const InstanceSet& s);
InstanceSet instances_from_jsonl(const std::string& text);
InstanceSet load_instances(const std::string& path);
void save_instances(const InstanceSet& s, const std::string& path);

}  // namespace convgraph
