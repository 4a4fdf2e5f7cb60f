#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kpath/exact.hpp"
#include "kpath/graph.hpp"
#include "kpath/rng.hpp"

namespace kpath {

// Any failure that is not the caller's fault (CLI exit code 3).
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The amplified solver contradicted itself.
class OracleFailure : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

// Every trial of a shrink round failed.
class RecoveryFailed : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

// The k remaining vertices could not be ordered into a path of weight d.
class ExtractionFailed : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

// Amplified weight solver used as a black box by the reduction driver.
class WeightOracle {
 public:
  virtual ~WeightOracle() = default;

  virtual int pattern_size() const = 0;
  virtual std::optional<std::int64_t> weight(const WeightedGraph& g) const = 0;
  // Same answer as weight(g) == d whenever d does not exceed the optimum of g.
  virtual bool attains(const WeightedGraph& g, std::int64_t d) const = 0;

  int calls() const { return calls_; }

 protected:
  void count_call() const { ++calls_; }

 private:
  mutable int calls_ = 0;
};

// k-path oracle backed by the exact solver (bounded when inner.cap is set).
class KPathOracle final : public WeightOracle {
 public:
  explicit KPathOracle(ExactConfig cfg) : cfg_(cfg) {}

  int pattern_size() const override { return cfg_.k; }
  std::optional<std::int64_t> weight(const WeightedGraph& g) const override;
  bool attains(const WeightedGraph& g, std::int64_t d) const override;

 private:
  ExactConfig cfg_;
};

struct RecoverConfig {
  ExactConfig inner;
  int retry_rounds = 8;               // trials per shrink round
  double removal_prob = 0.5;          // per-vertex deletion probability
  int shrink_floor = 20;              // self-reduction starts at or below this size
  double min_removed_fraction = 0.5;  // accept a trial iff removed >= fraction * |V| / k

  // retry_rounds = ceil(4 ln n) + 8, removal_prob = 1/k, shrink_floor = 10k.
  static RecoverConfig defaults(const ExactConfig& inner, int n);
};

// A subgraph together with the original ids of its vertices.
struct Reduction {
  WeightedGraph graph;
  std::vector<int> ids;
};

Reduction full_reduction(const WeightedGraph& g);

// One shrink round: up to retry_rounds random deletions; returns the first
// that removed enough vertices and keeps the oracle's answer at d.
std::optional<Reduction> shrink_round(const Reduction& current, std::int64_t d, const RecoverConfig& cfg,
                                      const WeightOracle& oracle, Rng& rng);

// Deletes vertices one at a time (ascending id) while the answer stays d,
// until exactly k remain. Throws OracleFailure otherwise.
Reduction self_reduce(const Reduction& current, std::int64_t d, const WeightOracle& oracle);

// Shrink rounds while above the floor, then self-reduction. Throws
// RecoveryFailed or OracleFailure.
Reduction reduce_to_pattern_size(const WeightedGraph& g, std::int64_t d, const RecoverConfig& cfg,
                                 const WeightOracle& oracle);

// Orders the k vertices of `gk` into a path of weight d by deleting edges
// that the oracle does not need. Returns original ids. Throws
// ExtractionFailed.
std::vector<int> extract_order(const Reduction& gk, std::int64_t d, const WeightOracle& oracle);

// Finds an actual minimum-weight k-path. The report's weight is the
// oracle's answer on g and vertices holds the path (0-based, in order).
SolveReport recover_path(const WeightedGraph& g, const RecoverConfig& cfg);

// Same driver against any k-path oracle (e.g. a capped one).
SolveReport recover_path_with(const WeightedGraph& g, const RecoverConfig& cfg, const WeightOracle& oracle);

}  // namespace kpath
