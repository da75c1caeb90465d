#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convgraph/metrics.hpp"
#include "convgraph/policy.hpp"

namespace convgraph {

enum class Strategy { Base, Dsample, Dupl, Mfs, MfsPlusBase, OraclePlusBase };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Ten fixed seeds used when a manifest does not list its own.
std::vector<std::uint64_t> default_seeds();

struct ExperimentManifest {
  std::string train_path;
  std::string dev_path;
  std::string test_path;
  Strategy strategy = Strategy::Base;
  LossKind loss = LossKind::Bce;
  int n = 4;
  std::vector<std::uint64_t> seeds = default_seeds();
  std::string out_dir;

  // training hyperparameters
  int hidden = 256;
  int batch_size = 32;
  int patience = 5;
  double learning_rate = 0.05;
  int max_epochs = 200;
  double threshold = 0.5;

  // strategy knobs
  int mfs_cap = 64;
  int duplication_factor = 2;

  /// Optional path to a BASE report to t-test against.
  std::optional<std::string> base_report;
};

ExperimentManifest manifest_from_json(const std::string& text);
ExperimentManifest load_manifest(const std::string& path);
std::string manifest_to_json(const ExperimentManifest& m);

struct BlockScores {
  ScoreReport dev;
  ScoreReport test_dedup;
  ScoreReport test;
};

struct ExperimentRun {
  std::uint64_t seed = 0;
  int best_epoch = -1;
  int epochs_run = 0;
  bool diverged = false;
  BlockScores scores;
};

struct ExperimentReport {
  int schema = 1;
  ExperimentManifest manifest;
  std::string vocab_hash;
  std::size_t base_instances = 0;
  std::size_t base_unique = 0;
  std::size_t train_instances = 0;  // size of the set actually trained on
  std::vector<ExperimentRun> runs;
  std::string report_json;  // canonical serialized form, written to disk
};

/// Runs the full pipeline: vocabulary, graphs, strategy, one model per
/// seed, three-block evaluation, optional t-test against a BASE report.
/// Persists every artifact under manifest.out_dir and returns the report.
ExperimentReport run_experiment(const ExperimentManifest& manifest);

}  // namespace convgraph
