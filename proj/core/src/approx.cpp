#include "kpath/approx.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "kpath/recover.hpp"

namespace kpath {
namespace {

constexpr int kMaxIterations = 200;

WeightedGraph zero_weights(const WeightedGraph& g) {
  WeightedGraph z = g;
  z.kind = WeightKind::Integer;
  for (Edge& e : z.edges) e.w = 0.0;
  return z;
}

void check_approx_input(const WeightedGraph& g, const ApproxConfig& cfg) {
  if (!(cfg.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (cfg.k < 1 || cfg.k > kMaxPatternSize) throw std::invalid_argument("k out of range");
  for (const Edge& e : g.edges) {
    if (!(e.w >= 1.0)) throw std::invalid_argument("approximation needs weights in [1, M]");
  }
}

}  // namespace

WeightedGraph scale_weights(const WeightedGraph& g, double divisor) {
  if (!(divisor > 0)) throw std::invalid_argument("scale_weights: divisor must be positive");
  WeightedGraph out = g;
  out.kind = WeightKind::Integer;
  for (Edge& e : out.edges) e.w = std::floor(e.w / divisor);
  return out;
}

ScaleState initial_state(const WeightedGraph& g, int k) {
  ScaleState s;
  s.k_prime = k - 1;
  s.lower = s.k_prime;
  s.upper = s.k_prime * std::max(g.max_weight(), 1.0);
  return s;
}

ScaleState refine_bounds(const ScaleState& state, const WeightedGraph& g, const CappedProblem& problem,
                         std::uint64_t seed, IterationTrace* trace) {
  const double lo = state.lower;
  const double hi = state.upper;
  const double x = std::sqrt(lo * hi);
  const double ratio = lo / hi;
  const double delta = std::cbrt(ratio) - std::sqrt(ratio);
  const double divisor = delta * hi / state.k_prime;
  const double cap = x / divisor;
  const bool found = problem.solve(scale_weights(g, divisor), cap, seed).has_value();
  ScaleState next = state;
  ++next.iteration;
  if (found) {
    next.upper = x + delta * hi;
  } else {
    next.lower = x;
  }
  if (trace) *trace = {lo, hi, x, delta, cap, found};
  return next;
}

ApproxReport approximate(const WeightedGraph& g, const CappedProblem& problem, const ApproxConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  check_approx_input(g, cfg);
  ApproxReport report;
  report.seed = cfg.seed;
  report.repetitions = cfg.inner.repetitions;
  auto finish = [&] {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  // Weight-free existence check: a cap-free call with all weights 0.
  if (!problem.solve(zero_weights(g), std::nullopt, stream_seed(cfg.seed, 0))) return finish();
  const int k = problem.pattern_size();
  if (k == 1) {
    report.weight = 0.0;
    report.scaled_weight = 0;
    report.vertices = problem.recover(zero_weights(g), 0.0, cfg.seed);
    return finish();
  }

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const std::uint64_t attempt_seed = stream_seed(cfg.seed, 1000 + attempt);
    report.attempts = attempt + 1;
    report.trace.clear();
    ScaleState state = initial_state(g, k);
    while (state.upper > 2 * state.lower && state.iteration < kMaxIterations) {
      IterationTrace it{};
      state = refine_bounds(state, g, problem, stream_seed(attempt_seed, state.iteration), &it);
      report.trace.push_back(it);
    }
    report.final_state = state;

    const double divisor = cfg.epsilon * state.lower / state.k_prime;
    const WeightedGraph scaled = scale_weights(g, divisor);
    const double cap = state.upper / divisor;
    report.final_cap = cap;
    const std::uint64_t final_seed = stream_seed(attempt_seed, kMaxIterations + 1);
    const auto d = problem.solve(scaled, cap, final_seed);
    // A path exists, so an empty answer means an earlier call broke the
    // bracket.
    if (!d) continue;
    std::vector<int> solution;
    try {
      solution = problem.recover(scaled, cap, final_seed);
    } catch (const SolverFailure&) {
      continue;
    }
    const double w = problem.solution_weight(g, solution);
    // Valid bracketing implies w <= w_eff + eps*L <= U + eps*L.
    const double limit = state.upper + cfg.epsilon * state.lower;
    if (w > limit * (1 + 1e-12)) continue;
    report.weight = w;
    report.scaled_weight = d;
    report.vertices = std::move(solution);
    return finish();
  }
  throw SolverFailure("approximation failed verification on every attempt");
}

std::optional<std::int64_t> KPathProblem::solve(const WeightedGraph& g, std::optional<double> cap,
                                                std::uint64_t seed) const {
  ExactConfig cfg = inner_;
  cfg.seed = seed;
  cfg.cap = cap;
  return min_kpath_weight(g, cfg).weight;
}

std::vector<int> KPathProblem::recover(const WeightedGraph& g, double cap, std::uint64_t seed) const {
  ExactConfig cfg = inner_;
  cfg.seed = seed;
  cfg.cap = cap;
  const RecoverConfig rc = RecoverConfig::defaults(cfg, g.n);
  const SolveReport r = recover_path(g, rc);
  if (!r.weight) throw OracleFailure("capped solver lost its solution during recovery");
  return r.vertices;
}

double KPathProblem::solution_weight(const WeightedGraph& g, const std::vector<int>& solution) const {
  return path_weight(g, solution);
}

ApproxReport approx_min_kpath(const WeightedGraph& g, const ApproxConfig& cfg) {
  ExactConfig inner = cfg.inner;
  inner.k = cfg.k;
  return approximate(g, KPathProblem(inner), cfg);
}

}  // namespace kpath
