#pragma once

#include <span>
#include <string>
#include <vector>

#include "convgraph/graph.hpp"
#include "convgraph/types.hpp"

namespace convgraph {

struct PredictionRecord {
  std::vector<BitVec> history;  // most recent first; history[0] resolves the node
  BitVec y_gold;
  BitVec y_hat;

  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

struct ScoreReport {
  double hard_f1 = 0.0;
  double soft_f1 = 0.0;
  std::size_t n_records = 0;
  std::size_t unresolved = 0;  // records whose context was absent from the graph
};

/// Set F1 over the set bits of both vectors. Both empty -> 1, exactly one
/// empty -> 0. Symmetric. Throws WidthMismatch.
double f1_score(const BitVec& y, const BitVec& y_hat);

/// max F1 over all references. Throws EmptyReferenceSet.
double soft_f1(const BitVec& y_hat, std::span<const BitVec> refs);

/// Samples averaging: per-record hard and soft scores, then stable means.
/// The reference set per record is the eval graph's valid actions at the
/// node resolved from history[0], plus the gold target. Unresolved
/// contexts fall back to {gold} and are tallied, not fatal.
ScoreReport evaluate(std::span<const PredictionRecord> preds,
                     const ConvGraph& eval_graph);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  bool significant = false;
  bool degenerate_variance = false;
};

/// Welch's two-tailed t-test (unequal variances, Welch-Satterthwaite df).
/// Both samples need >= 2 values. With zero variance on both sides:
/// p = 1 when the means agree, else p = 0 with the degenerate flag set.
TTestResult welch_ttest(std::span<const double> a, std::span<const double> b,
                        double alpha = 0.05);

// --- persistence -----------------------------------------------------------

std::string predictions_to_jsonl(std::span<const PredictionRecord> preds);
std::vector<PredictionRecord> predictions_from_jsonl(const std::string& text);
std::vector<PredictionRecord> load_predictions(const std::string& path);
void save_predictions(std::span<const PredictionRecord> preds,
                      const std::string& path);

std::string score_report_to_json(const ScoreReport& r);

}  // namespace convgraph
