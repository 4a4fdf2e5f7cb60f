// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kpath/approx.hpp"
#include "kpath/bench.hpp"
#include "kpath/exact.hpp"
#include "kpath/generators.hpp"
#include "kpath/ktree.hpp"
#include "kpath/oracle.hpp"
#include "kpath/recover.hpp"

namespace kpath {
namespace {

// Pinned tolerances.
constexpr int kEquivInstances = 200;
constexpr int kEquivN = 10;
constexpr double kEquivEdgeProb = 0.5;
constexpr int kEquivK = 5;
constexpr int kEquivReps = 60;
constexpr std::int64_t kEquivWeight = 10;

constexpr int kSuccessRuns = 1000;
constexpr double kMinSuccessRate = 0.20;

constexpr int kRankSamples = 10'000;
constexpr int kRankK = 10;
constexpr double kRankLo = 0.26;
constexpr double kRankHi = 0.32;

constexpr int kRingPairs = 100;
constexpr int kRingK = 6;
constexpr int kRingCap = 50;
constexpr int kSquareMaxK = 12;
constexpr int kBasisSamples = 100;

constexpr int kRecoverInstances = 100;
constexpr int kRecoverN = 40;
constexpr int kRecoverK = 4;
constexpr int kRecoverMaxFailures = 2;

constexpr int kApproxInstances = 50;
constexpr int kApproxMaxN = 10;
constexpr int kApproxK = 4;
constexpr double kApproxEps = 0.1;
constexpr double kApproxMaxWeight = 1e6;
constexpr std::size_t kApproxMaxIterations = 10;
constexpr double kContractionSlack = 1e-9;

constexpr int kTreeInstances = 100;
constexpr int kTreeN = 9;
constexpr int kTreeReps = 60;
constexpr int kTreePathInstances = 50;

constexpr int kBenchN = 30;
constexpr int kBenchRuns = 5;
constexpr double kKRatioLo = 1.6;
constexpr double kKRatioHi = 2.8;
constexpr double kMRatioLo = 1.5;
constexpr double kMRatioHi = 2.5;

constexpr std::uint64_t kSeed = 20240601;

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<WeightedGraph> equivalence_instances() {
  Rng gen(stream_seed(kSeed, 1));
  std::vector<WeightedGraph> out;
  for (int i = 0; i < kEquivInstances; ++i) {
    out.push_back(random_graph(kEquivN, kEquivEdgeProb, true, -kEquivWeight, kEquivWeight, gen));
  }
  return out;
}

void criterion_exact_equivalence(const std::vector<WeightedGraph>& graphs) {
  const auto start = std::chrono::steady_clock::now();
  int agree = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ExactConfig cfg;
    cfg.k = kEquivK;
    cfg.repetitions = kEquivReps;
    cfg.seed = stream_seed(kSeed, 100 + i);
    const SolveReport r = min_kpath_weight(graphs[i], cfg);
    const auto oracle = oracle_min_kpath(graphs[i], kEquivK);
    const bool same = r.weight.has_value() == oracle.has_value() &&
                      (!oracle || static_cast<double>(*r.weight) == oracle->weight);
    agree += same;
  }
  report(1, agree == kEquivInstances, "exact oracle equivalence",
         fmt("%d/%d instances equal (n=%d, k=%d, %d reps) in %.1fs", agree, kEquivInstances, kEquivN, kEquivK,
             kEquivReps, seconds_since(start)));
}

void criterion_one_sided(const std::vector<WeightedGraph>& graphs) {
  int runs = 0;
  int returned = 0;
  int violations = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto weights = oracle_kpath_weights(graphs[i], kEquivK);
    for (int r = 0; r < kEquivReps; ++r) {
      Rng rng(stream_seed(stream_seed(kSeed, 100 + i), static_cast<std::uint64_t>(r)));
      const auto w = min_kpath_weight_once(graphs[i], kEquivK, rng);
      ++runs;
      if (!w) continue;
      ++returned;
      violations += !std::binary_search(weights.begin(), weights.end(), static_cast<double>(*w));
    }
  }
  report(2, violations == 0, "one-sidedness",
         fmt("%d violations among %d returned weights (%d single runs)", violations, returned, runs));
}

void criterion_success_rate() {
  Rng gen(stream_seed(kSeed, 3));
  PlantedInstance inst = planted_path_instance(12, 5, 0.3, gen);
  // Every other 5-path uses a noise arc, so the planted path is the unique optimum.
  const auto best = oracle_min_kpath(inst.graph, 5);
  const bool unique = best && best->weight == static_cast<double>(inst.weight) && best->vertices == inst.path;
  int successes = 0;
  for (int r = 0; r < kSuccessRuns; ++r) {
    Rng rng(stream_seed(kSeed ^ 0x5EED, static_cast<std::uint64_t>(r)));
    const auto w = min_kpath_weight_once(inst.graph, 5, rng);
    successes += w && *w == inst.weight;
  }
  const double rate = static_cast<double>(successes) / kSuccessRuns;
  report(3, unique && rate >= kMinSuccessRate, "single-run success rate",
         fmt("%d/%d = %.3f (threshold %.2f, unique optimum %lld)", successes, kSuccessRuns, rate, kMinSuccessRate,
             static_cast<long long>(inst.weight)));
}

double exhaustive_full_rank_fraction(int k) {
  const std::uint32_t rows = 1u << k;
  std::size_t full = 0;
  std::size_t total = 0;
  std::vector<GroupVector> m(static_cast<std::size_t>(k));
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      ++total;
      full += linearly_independent(m);
      return;
    }
    for (std::uint32_t r = 0; r < rows; ++r) {
      m[static_cast<std::size_t>(i)] = {r};
      rec(i + 1);
    }
  };
  rec(0);
  return static_cast<double>(full) / static_cast<double>(total);
}

void criterion_full_rank() {
  Rng rng(stream_seed(kSeed, 4));
  int full = 0;
  std::vector<GroupVector> m(kRankK);
  for (int s = 0; s < kRankSamples; ++s) {
    for (auto& row : m) row = {static_cast<std::uint32_t>(rng.bits(kRankK))};
    full += linearly_independent(m);
  }
  const double fraction = static_cast<double>(full) / kRankSamples;
  double product = 1.0;
  for (int i = 1; i <= 3; ++i) product *= 1.0 - std::ldexp(1.0, -i);
  const double brute = exhaustive_full_rank_fraction(3);
  report(4, fraction >= kRankLo && fraction <= kRankHi && std::abs(brute - product) < 1e-12, "full-rank constant",
         fmt("k=%d fraction %.4f in [%.2f, %.2f]; k=3 exhaustive %.6f vs product %.6f", kRankK, fraction, kRankLo,
             kRankHi, brute, product));
}

RingElement random_element(const RingContext& ctx, Rng& rng) {
  RingElement e(ctx);
  for (auto& c : e.raw()) {
    if (rng.bernoulli(0.2)) c = static_cast<std::uint8_t>(rng.bits(ctx->field().ell()));
  }
  return e;
}

void criterion_ring() {
  Rng rng(stream_seed(kSeed, 5));
  auto ctx = make_ring(kRingK, kRingCap);
  int random_ok = 0;
  for (int i = 0; i < kRingPairs; ++i) {
    const RingElement p = random_element(ctx, rng);
    const RingElement q = random_element(ctx, rng);
    random_ok += ra_mul_fast(p, q) == ra_mul_naive(p, q);
  }
  int monomial_checks = 0;
  int monomial_ok = 0;
  for (std::uint32_t a = 0; a < (1u << kRingK); a += 7) {
    for (std::uint32_t b = 0; b < (1u << kRingK); b += 11) {
      for (int da : {0, 13, 49}) {
        for (int db : {0, 1, 36}) {
          const RingElement p = RingElement::term(ctx, {a}, da, {1});
          const RingElement q = RingElement::term(ctx, {b}, db, {3});
          ++monomial_checks;
          monomial_ok += ra_mul_fast(p, q) == ra_mul_naive(p, q);
        }
      }
    }
  }
  int square_checks = 0;
  int square_ok = 0;
  for (int k = 1; k <= kSquareMaxK; ++k) {
    auto sq = make_ring(k, 1);
    for (std::uint32_t v = 0; v < (1u << k); ++v) {
      const GroupVector vs[2] = {{v}, {v}};
      ++square_checks;
      square_ok += ra_product_of_lifted_vectors(sq, vs).is_zero();
    }
  }
  auto jctx = make_ring(kRingK + 4, 1);
  const RingElement j = ra_all_vectors(jctx);
  int basis_ok = 0;
  for (int b = 0; b < kBasisSamples;) {
    std::vector<GroupVector> vs(static_cast<std::size_t>(jctx->k()));
    for (auto& v : vs) v = {static_cast<std::uint32_t>(rng.bits(jctx->k()))};
    if (!linearly_independent(vs)) continue;
    basis_ok += ra_product_of_lifted_vectors(jctx, vs) == j;
    ++b;
  }
  const bool pass = random_ok == kRingPairs && monomial_ok == monomial_checks && square_ok == square_checks &&
                    basis_ok == kBasisSamples;
  report(5, pass, "ring correctness",
         fmt("fast=naive %d/%d random, %d/%d monomial; (1+v)^2=0 %d/%d for k<=%d; basis product=J %d/%d (k=%d)",
             random_ok, kRingPairs, monomial_ok, monomial_checks, square_ok, square_checks, kSquareMaxK, basis_ok,
             kBasisSamples, jctx->k()));
}

void criterion_recovery() {
  const auto start = std::chrono::steady_clock::now();
  Rng gen(stream_seed(kSeed, 6));
  int failed = 0;
  for (int i = 0; i < kRecoverInstances; ++i) {
    const PlantedInstance inst = planted_path_instance(kRecoverN, kRecoverK, 4.0 / kRecoverN, gen);
    ExactConfig inner;
    inner.k = kRecoverK;
    inner.seed = stream_seed(kSeed, 600 + static_cast<std::uint64_t>(i));
    bool ok = false;
    try {
      const SolveReport solved = min_kpath_weight(inst.graph, inner);
      const SolveReport r = recover_path(inst.graph, RecoverConfig::defaults(inner, kRecoverN));
      ok = r.weight && solved.weight == r.weight && r.vertices.size() == static_cast<std::size_t>(kRecoverK) &&
           is_simple_path(inst.graph, r.vertices) &&
           path_weight(inst.graph, r.vertices) == static_cast<double>(*r.weight) && r.vertices == inst.path;
    } catch (const SolverFailure&) {
      ok = false;
    }
    failed += !ok;
  }
  report(6, failed <= kRecoverMaxFailures, "path recovery",
         fmt("%d/%d planted paths recovered (n=%d, k=%d), %d failures allowed, %.1fs", kRecoverInstances - failed,
             kRecoverInstances, kRecoverN, kRecoverK, kRecoverMaxFailures, seconds_since(start)));
}

void criterion_approximation() {
  Rng gen(stream_seed(kSeed, 7));
  int within = 0;
  int iterations_ok = 0;
  int contraction_ok = 0;
  double worst_ratio = 0.0;
  std::size_t max_iterations = 0;
  for (int done = 0; done < kApproxInstances;) {
    const int n = static_cast<int>(gen.uniform_int(kApproxK + 2, kApproxMaxN));
    const WeightedGraph g = random_real_graph(n, 0.4, gen.bernoulli(0.5), 1.0, kApproxMaxWeight, gen);
    const auto opt = oracle_min_kpath(g, kApproxK);
    if (!opt) continue;
    ApproxConfig cfg;
    cfg.k = kApproxK;
    cfg.epsilon = kApproxEps;
    cfg.seed = stream_seed(kSeed, 700 + static_cast<std::uint64_t>(done));
    const ApproxReport r = approx_min_kpath(g, cfg);
    ++done;
    if (!r.weight) continue;
    const double ratio = *r.weight / opt->weight;
    worst_ratio = std::max(worst_ratio, ratio);
    within += ratio <= 1.0 + kApproxEps;
    max_iterations = std::max(max_iterations, r.trace.size());
    iterations_ok += r.trace.size() <= kApproxMaxIterations;
    bool contracts = true;
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
      const double before = r.trace[t].upper / r.trace[t].lower;
      const double after = t + 1 < r.trace.size() ? r.trace[t + 1].upper / r.trace[t + 1].lower
                                                  : r.final_state.upper / r.final_state.lower;
      contracts = contracts && after <= std::pow(before, 2.0 / 3.0) + kContractionSlack;
    }
    contraction_ok += contracts;
  }
  const bool pass = within == kApproxInstances && iterations_ok == kApproxInstances &&
                    contraction_ok == kApproxInstances;
  report(7, pass, "approximation guarantee",
         fmt("%d/%d within %.1fx (worst %.4f); iterations<=%zu on %d (max %zu); contraction on %d", within,
             kApproxInstances, 1.0 + kApproxEps, worst_ratio, kApproxMaxIterations, iterations_ok, max_iterations,
             contraction_ok));
}

void criterion_ktree() {
  const auto start = std::chrono::steady_clock::now();
  Rng gen(stream_seed(kSeed, 8));
  int agree = 0;
  for (int i = 0; i < kTreeInstances; ++i) {
    const WeightedGraph g = random_graph(kTreeN, 0.4, gen.bernoulli(0.5), -10, 10, gen);
    const TreePattern t = random_tree(gen.bernoulli(0.5) ? 3 : 4, gen);
    ExactConfig cfg;
    cfg.k = t.k;
    cfg.repetitions = kTreeReps;
    cfg.seed = stream_seed(kSeed, 800 + static_cast<std::uint64_t>(i));
    const SolveReport r = min_ktree_weight(g, t, cfg);
    const auto oracle = oracle_min_ktree(g, t);
    agree += r.weight.has_value() == oracle.has_value() && (!oracle || static_cast<double>(*r.weight) == oracle->weight);
  }
  int path_agree = 0;
  for (int i = 0; i < kTreePathInstances; ++i) {
    const WeightedGraph g = random_graph(kTreeN, 0.4, gen.bernoulli(0.5), -10, 10, gen);
    const int k = gen.bernoulli(0.5) ? 3 : 4;
    ExactConfig cfg;
    cfg.k = k;
    cfg.repetitions = kTreeReps;
    cfg.seed = stream_seed(kSeed, 900 + static_cast<std::uint64_t>(i));
    path_agree += min_ktree_weight(g, TreePattern::path(k), cfg).weight == min_kpath_weight(g, cfg).weight;
  }
  report(8, agree == kTreeInstances && path_agree == kTreePathInstances, "k-tree oracle equivalence",
         fmt("%d/%d equal to backtracking oracle; path pattern = path solver on %d/%d; %.1fs", agree, kTreeInstances,
             path_agree, kTreePathInstances, seconds_since(start)));
}

void criterion_scaling() {
  BenchGrid k_grid;
  k_grid.mode = "exact";
  k_grid.n = kBenchN;
  k_grid.ks = {10, 11, 12, 13};
  k_grid.ms = {10};
  k_grid.runs = kBenchRuns;
  k_grid.seed = kSeed;
  const auto k_rows = run_bench(k_grid);

  BenchGrid m_grid = k_grid;
  m_grid.ks = {10};
  m_grid.ms = {8, 16, 32, 64};
  const auto m_rows = run_bench(m_grid);

  std::string detail = "k-ratios";
  bool pass = true;
  for (std::size_t i = 1; i < k_rows.size(); ++i) {
    const double r = k_rows[i].elapsed_ms / k_rows[i - 1].elapsed_ms;
    pass = pass && r >= kKRatioLo && r <= kKRatioHi;
    detail += fmt(" %d->%d:%.2f", k_rows[i - 1].k, k_rows[i].k, r);
  }
  detail += fmt(" in [%.1f, %.1f]; M-ratios", kKRatioLo, kKRatioHi);
  for (std::size_t i = 1; i < m_rows.size(); ++i) {
    const double r = m_rows[i].elapsed_ms / m_rows[i - 1].elapsed_ms;
    pass = pass && r >= kMRatioLo && r <= kMRatioHi;
    detail += fmt(" %lld->%lld:%.2f", static_cast<long long>(m_rows[i - 1].m), static_cast<long long>(m_rows[i].m), r);
  }
  detail += fmt(" in [%.1f, %.1f]; n=%d, median of %d", kMRatioLo, kMRatioHi, kBenchN, kBenchRuns);
  report(9, pass, "empirical scaling shape", detail);
}

}  // namespace
}  // namespace kpath

int main(int argc, char** argv) {
  using namespace kpath;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  auto wanted = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };

  if (wanted(1) || wanted(2)) {
    const auto graphs = equivalence_instances();
    if (wanted(1)) criterion_exact_equivalence(graphs);
    if (wanted(2)) criterion_one_sided(graphs);
  }
  if (wanted(3)) criterion_success_rate();
  if (wanted(4)) criterion_full_rank();
  if (wanted(5)) criterion_ring();
  if (wanted(6)) criterion_recovery();
  if (wanted(7)) criterion_approximation();
  if (wanted(8)) criterion_ktree();
  if (wanted(9)) criterion_scaling();
  return failures == 0 ? 0 : 1;
}
