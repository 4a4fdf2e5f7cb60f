#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/group_algebra.hpp"
#include "kpath/rng.hpp"

namespace kpath {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr int kMaxPatternSize = 24;

struct ExactConfig {
  int k = 2;
  int repetitions = 60;
  std::uint64_t seed = kDefaultSeed;
  // Degree bound B: edges heavier than B are dropped and degrees above B
  // are truncated. Requires nonnegative weights.
  std::optional<double> cap;
  int threads = 1;
};

struct SolveReport {
  std::optional<std::int64_t> weight;  // original (unshifted) scale
  std::vector<int> vertices;           // 0-based; filled by recovery
  int repetitions_used = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
};

struct ShiftedGraph {
  WeightedGraph graph;
  std::int64_t offset = 0;  // subtract from any k-path weight on `graph`
};

// Adds `shift` to every edge weight; each k-path gains (k-1) * shift, so the
// order of k-path weights is preserved.
ShiftedGraph shift_weights(const WeightedGraph& g, int k, std::int64_t shift);

// The smallest shift making every weight nonnegative (min weight becomes 0).
ShiftedGraph normalize_weights(const WeightedGraph& g, int k);

// P'(z) for nonnegative integer weights: the all-ones row vector times
// B_1 ... B_{k-1} times the lifted vertex vector, evaluated left to right.
// Draw order from `rng`: one k-bit group vector per vertex, then one field
// value per (layer, arc) in layer-major, arc-list order.
RingElement evaluate_walk_polynomial(const WeightedGraph& g, int k, Rng& rng, const RingContext& ring);

// One unamplified run. Without a cap the weights are normalized first and
// the cap is (k-1) * max_weight + 1; with a cap the bounded semantics apply.
std::optional<std::int64_t> min_kpath_weight_once(const WeightedGraph& g, int k, Rng& rng,
                                                  std::optional<double> cap = std::nullopt);

// Minimum over cfg.repetitions independent runs. Run r draws from
// Rng(stream_seed(cfg.seed, r)), so the result does not depend on threads.
SolveReport min_kpath_weight(const WeightedGraph& g, const ExactConfig& cfg);

// Minimum k-path weight that is at most `bound`, if any.
SolveReport bounded_min_kpath_weight(const WeightedGraph& g, int k, double bound, ExactConfig cfg);

// Whether the amplified solver answers exactly `d` on g. Stops at the first
// run returning d (runs never report less than the true optimum), so it
// agrees with min_kpath_weight(g, cfg).weight == d whenever d <= optimum.
bool kpath_attains(const WeightedGraph& g, const ExactConfig& cfg, std::int64_t d);

// Validates k and weight kind; throws std::invalid_argument.
void check_exact_input(const WeightedGraph& g, int k, const std::optional<double>& cap);

}  // namespace kpath
