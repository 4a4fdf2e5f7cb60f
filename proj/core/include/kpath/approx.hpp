#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kpath/exact.hpp"
#include "kpath/graph.hpp"

namespace kpath {

struct ApproxConfig {
  int k = 2;
  double epsilon = 0.1;
  std::uint64_t seed = kDefaultSeed;
  ExactConfig inner;     // repetitions and threads for every bounded call
  int max_attempts = 3;  // whole-procedure retries after a detected solver error
};

// Bracket L <= w(OPT) <= U maintained by the refinement loop.
struct ScaleState {
  double lower = 0.0;
  double upper = 0.0;
  int k_prime = 1;  // edges in a solution
  int iteration = 0;
};

struct IterationTrace {
  double lower;
  double upper;
  double x;
  double delta;
  double cap;  // scaled bound handed to the bounded solver
  bool found;
};

struct ApproxReport {
  std::optional<double> weight;  // true weight of the returned solution
  std::vector<int> vertices;     // path order or embedding (0-based)
  std::optional<std::int64_t> scaled_weight;
  double final_cap = 0.0;
  ScaleState final_state;
  std::vector<IterationTrace> trace;
  int attempts = 0;
  std::uint64_t seed = 0;
  int repetitions = 0;
  double elapsed_ms = 0.0;
};

// An exact solver that accepts a weight cap; the approximation driver only
// talks to this interface so k-paths and k-trees share one loop.
class CappedProblem {
 public:
  virtual ~CappedProblem() = default;

  virtual int pattern_size() const = 0;
  int edges_in_solution() const { return pattern_size() - 1; }

  // Minimum solution weight (at most cap, when given) on an integer graph.
  virtual std::optional<std::int64_t> solve(const WeightedGraph& g, std::optional<double> cap,
                                            std::uint64_t seed) const = 0;

  // An actual solution of weight solve(g, cap, seed). Throws SolverFailure.
  virtual std::vector<int> recover(const WeightedGraph& g, double cap, std::uint64_t seed) const = 0;

  // True weight of a solution in g (real weights allowed).
  virtual double solution_weight(const WeightedGraph& g, const std::vector<int>& solution) const = 0;
};

// w'(e) = floor(w(e) / divisor), as an integer graph.
WeightedGraph scale_weights(const WeightedGraph& g, double divisor);

ScaleState initial_state(const WeightedGraph& g, int k);

// One iteration of the loop: X = sqrt(LU), delta = (L/U)^(1/3) - sqrt(L/U),
// scale by delta*U/k' and ask for a solution of scaled weight at most
// X / (delta*U/k'). On success U <- X + delta*U, otherwise L <- X.
ScaleState refine_bounds(const ScaleState& state, const WeightedGraph& g, const CappedProblem& problem,
                         std::uint64_t seed, IterationTrace* trace = nullptr);

// Full driver; requires real weights in [1, M]. Throws SolverFailure when
// every attempt hits a detected solver inconsistency.
ApproxReport approximate(const WeightedGraph& g, const CappedProblem& problem, const ApproxConfig& cfg);

ApproxReport approx_min_kpath(const WeightedGraph& g, const ApproxConfig& cfg);

// k-path instance of CappedProblem.
class KPathProblem final : public CappedProblem {
 public:
  explicit KPathProblem(ExactConfig inner) : inner_(inner) {}

  int pattern_size() const override { return inner_.k; }
  std::optional<std::int64_t> solve(const WeightedGraph& g, std::optional<double> cap,
                                    std::uint64_t seed) const override;
  std::vector<int> recover(const WeightedGraph& g, double cap, std::uint64_t seed) const override;
  double solution_weight(const WeightedGraph& g, const std::vector<int>& solution) const override;

 private:
  ExactConfig inner_;
};

}  // namespace kpath
