#include "kpath/recover.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace kpath {
namespace {

// Stream index reserved for the vertex-deletion coin flips, distinct from
// the solver's repetition streams.
constexpr std::uint64_t kDeletionStream = 0xDE1E7E;

Reduction without_vertex(const Reduction& r, std::size_t local) {
  std::vector<int> keep;
  keep.reserve(r.ids.size() - 1);
  for (std::size_t i = 0; i < r.ids.size(); ++i) {
    if (i != local) keep.push_back(static_cast<int>(i));
  }
  Reduction out{induced_subgraph(r.graph, keep), {}};
  for (int i : keep) out.ids.push_back(r.ids[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::optional<std::int64_t> KPathOracle::weight(const WeightedGraph& g) const {
  count_call();
  return min_kpath_weight(g, cfg_).weight;
}

bool KPathOracle::attains(const WeightedGraph& g, std::int64_t d) const {
  count_call();
  return kpath_attains(g, cfg_, d);
}

RecoverConfig RecoverConfig::defaults(const ExactConfig& inner, int n) {
  RecoverConfig cfg;
  cfg.inner = inner;
  cfg.retry_rounds = static_cast<int>(std::ceil(4.0 * std::log(std::max(n, 2)))) + 8;
  cfg.removal_prob = 1.0 / std::max(inner.k, 2);
  cfg.shrink_floor = 10 * inner.k;
  cfg.min_removed_fraction = 0.5;
  return cfg;
}

Reduction full_reduction(const WeightedGraph& g) {
  Reduction r{g, std::vector<int>(static_cast<std::size_t>(g.n))};
  std::iota(r.ids.begin(), r.ids.end(), 0);
  return r;
}

std::optional<Reduction> shrink_round(const Reduction& current, std::int64_t d, const RecoverConfig& cfg,
                                      const WeightOracle& oracle, Rng& rng) {
  const int n = current.graph.n;
  const double needed = cfg.min_removed_fraction * n / oracle.pattern_size();
  for (int trial = 0; trial < cfg.retry_rounds; ++trial) {
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
      if (!rng.bernoulli(cfg.removal_prob)) keep.push_back(v);
    }
    const auto removed = static_cast<double>(n - static_cast<int>(keep.size()));
    if (removed < needed || removed == 0) continue;
    Reduction candidate{induced_subgraph(current.graph, keep), {}};
    for (int v : keep) candidate.ids.push_back(current.ids[static_cast<std::size_t>(v)]);
    if (oracle.attains(candidate.graph, d)) return candidate;
  }
  return std::nullopt;
}

Reduction self_reduce(const Reduction& current, std::int64_t d, const WeightOracle& oracle) {
  const auto k = static_cast<std::size_t>(oracle.pattern_size());
  Reduction r = current;
  std::size_t local = 0;
  while (r.ids.size() > k && local < r.ids.size()) {
    Reduction candidate = without_vertex(r, local);
    if (oracle.attains(candidate.graph, d)) {
      r = std::move(candidate);  // the next vertex slides into `local`
    } else {
      ++local;
    }
  }
  if (r.ids.size() != k) {
    throw OracleFailure("self-reduction stopped at " + std::to_string(r.ids.size()) + " vertices");
  }
  return r;
}

Reduction reduce_to_pattern_size(const WeightedGraph& g, std::int64_t d, const RecoverConfig& cfg,
                                 const WeightOracle& oracle) {
  Rng rng(stream_seed(cfg.inner.seed, kDeletionStream));
  Reduction r = full_reduction(g);
  while (r.graph.n > cfg.shrink_floor) {
    auto smaller = shrink_round(r, d, cfg, oracle, rng);
    if (!smaller) {
      throw RecoveryFailed("all " + std::to_string(cfg.retry_rounds) + " trials of a shrink round failed at " +
                           std::to_string(r.graph.n) + " vertices");
    }
    r = std::move(*smaller);
  }
  return self_reduce(r, d, oracle);
}

std::vector<int> extract_order(const Reduction& gk, std::int64_t d, const WeightOracle& oracle) {
  const int k = oracle.pattern_size();
  WeightedGraph g = gk.graph;
  std::erase_if(g.edges, [](const Edge& e) { return e.u == e.v; });
  for (std::size_t i = 0; i < g.edges.size();) {
    WeightedGraph candidate = without_edge(g, i);
    if (oracle.attains(candidate, d)) {
      g = std::move(candidate);
    } else {
      ++i;
    }
  }
  if (static_cast<int>(g.edges.size()) != k - 1) {
    throw ExtractionFailed("edge self-reduction left " + std::to_string(g.edges.size()) + " edges");
  }

  // The remaining edges must form a single path; start at an endpoint
  // (for directed graphs the vertex without incoming arcs).
  std::vector<int> in_deg(static_cast<std::size_t>(g.n), 0);
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (const Edge& e : g.edges) {
    ++in_deg[static_cast<std::size_t>(e.v)];
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  int start = -1;
  for (int v = 0; v < g.n && start < 0; ++v) {
    const bool endpoint = g.directed ? in_deg[static_cast<std::size_t>(v)] == 0 : deg[static_cast<std::size_t>(v)] <= 1;
    if (endpoint) start = v;
  }
  if (start < 0) throw ExtractionFailed("remaining edges have no endpoint");
  std::vector<int> order{start};
  std::vector<char> used(static_cast<std::size_t>(g.n), 0);
  used[static_cast<std::size_t>(start)] = 1;
  while (static_cast<int>(order.size()) < k) {
    const int at = order.back();
    int next = -1;
    for (const Edge& e : g.edges) {
      if (e.u == at && !used[static_cast<std::size_t>(e.v)]) next = e.v;
      else if (!g.directed && e.v == at && !used[static_cast<std::size_t>(e.u)]) next = e.u;
      if (next >= 0) break;
    }
    if (next < 0) throw ExtractionFailed("remaining edges do not form a path");
    used[static_cast<std::size_t>(next)] = 1;
    order.push_back(next);
  }
  if (integer_weight(path_weight(g, order)) != d) throw ExtractionFailed("extracted path has the wrong weight");
  std::vector<int> ids;
  for (int v : order) ids.push_back(gk.ids[static_cast<std::size_t>(v)]);
  return ids;
}

SolveReport recover_path_with(const WeightedGraph& g, const RecoverConfig& cfg, const WeightOracle& oracle) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.seed = cfg.inner.seed;
  report.repetitions_used = cfg.inner.repetitions;
  const auto d = oracle.weight(g);
  if (d) {
    report.weight = d;
    if (oracle.pattern_size() == 1) {
      report.vertices = {0};
    } else {
      const Reduction gk = reduce_to_pattern_size(g, *d, cfg, oracle);
      report.vertices = extract_order(gk, *d, oracle);
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SolveReport recover_path(const WeightedGraph& g, const RecoverConfig& cfg) {
  const KPathOracle oracle(cfg.inner);
  return recover_path_with(g, cfg, oracle);
}

}  // namespace kpath
