#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convgraph/graph.hpp"
#include "convgraph/instances.hpp"
#include "convgraph/types.hpp"

namespace convgraph {

enum class LossKind { Bce, Sbce };

std::string loss_name(LossKind loss);
LossKind loss_from_name(const std::string& name);

/// 1-hidden-layer multi-label classifier over concatenated history states:
/// sigmoid(w2 * relu(w1 * x + b1) + b2), x = history[0] ++ … ++ history[n-1].
struct PolicyModel {
  Matrix w1;  // hidden x input
  Vector b1;  // hidden
  Matrix w2;  // output x hidden
  Vector b2;  // output

  int n = 0;                 // history length
  int state_size = 0;        // |ds|
  int act_size = 0;          // |da| == output size
  std::uint64_t seed = 0;

  int input_size() const { return n * state_size; }
  int hidden_size() const { return static_cast<int>(b1.size()); }

  bool finite() const;

  friend bool operator==(const PolicyModel&, const PolicyModel&) = default;
};

/// Seeded uniform init in ±1/sqrt(fan_in).
PolicyModel init_model(int n, int state_size, int act_size, int hidden,
                       std::uint64_t seed);

Vector concat_history(std::span<const BitVec> history, int n, int state_size);

/// Output probabilities, strictly inside (0, 1). Throws ShapeMismatch.
Vector forward(const PolicyModel& m, std::span<const BitVec> history);

/// bit i = 1 iff probability i > threshold (strict).
BitVec predict(const PolicyModel& m, std::span<const BitVec> history,
               double threshold = 0.5);

/// -sum(y log p + (1-y) log(1-p)); probabilities clamped at 1e-12.
double bce_loss(const BitVec& y, const Vector& p);

/// min over references of bce_loss; returns (loss, chosen index). Ties go
/// to the reference earliest in canonical order, then lowest index.
std::pair<double, std::size_t> sbce_loss(const Vector& p,
                                         std::span<const BitVec> refs);

struct TrainConfig {
  LossKind loss = LossKind::Bce;
  int batch_size = 32;
  int patience = 5;
  double learning_rate = 0.05;
  int max_epochs = 200;
  std::uint64_t seed = 13;
  double threshold = 0.5;
  int hidden = 256;
};

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double dev_hard_f1 = 0.0;
};

struct TrainLog {
  std::vector<EpochRecord> epochs;
  int best_epoch = -1;
  double best_dev_hard_f1 = 0.0;
  bool diverged = false;
};

/// Mini-batch SGD with seeded shuffling; dev HardF1 early stopping with
/// the configured patience; returns the best-epoch snapshot. For SBCE the
/// references per instance are the graph's valid actions at the node
/// resolved from history[0], plus the gold target ({gold} alone when the
/// context is absent). Bitwise reproducible for a fixed (inputs, config).
std::pair<PolicyModel, TrainLog> train(const InstanceSet& base,
                                       const InstanceSet& dev,
                                       const ConvGraph* g_train,
                                       const TrainConfig& cfg);

/// Max relative error between analytic gradients and central finite
/// differences over every parameter, for one instance.
double grad_check(const PolicyModel& m, const TrainingInstance& instance,
                  LossKind loss, std::span<const BitVec> refs,
                  double epsilon = 1e-5);

// --- persistence -----------------------------------------------------------

/// Flat little-endian binary: magic, header ints, then row-major doubles.
/// load(save(m)) reproduces forward outputs bit-identically.
std::vector<std::uint8_t> model_to_bytes(const PolicyModel& m);
PolicyModel model_from_bytes(std::span<const std::uint8_t> bytes);
PolicyModel load_model(const std::string& path);
void save_model(const PolicyModel& m, const std::string& path);

std::string train_log_to_json(const TrainLog& log);

}  // namespace convgraph
