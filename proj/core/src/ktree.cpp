#include "kpath/ktree.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "kpath/amplify.hpp"
#include "kpath/oracle.hpp"

namespace kpath {
namespace {

class TreeInstance {
 public:
  TreeInstance(const WeightedGraph& g, const TreePattern& t, std::optional<double> cap) : tree_(t) {
    WeightedGraph work = g;
    if (cap) {
      if (g.has_negative_weight()) throw std::invalid_argument("bounded solver needs nonnegative weights");
      const double bound = std::floor(*cap);
      std::erase_if(work.edges, [&](const Edge& e) { return e.w > bound; });
      degree_cap_ = bound < 0 ? 0 : static_cast<int>(bound) + 1;
    } else {
      ShiftedGraph shifted = normalize_weights(g, t.k);
      work = std::move(shifted.graph);
      offset_ = shifted.offset;
      degree_cap_ = static_cast<int>((t.k - 1) * integer_weight(work.max_weight()) + 1);
    }
    graph_ = std::move(work);
    if (degree_cap_ > 0) ring_ = make_ring(t.k, degree_cap_);
  }

  std::optional<std::int64_t> run(std::uint64_t seed) const {
    Rng rng(seed);
    return run(rng);
  }

  std::optional<std::int64_t> run(Rng& rng) const {
    if (!ring_) return std::nullopt;
    const auto low = ra_min_degree(ktree_circuit_eval(graph_, tree_, rng, ring_));
    if (!low) return std::nullopt;
    return low->degree - offset_;
  }

 private:
  TreePattern tree_;
  WeightedGraph graph_;
  std::int64_t offset_ = 0;
  int degree_cap_ = 0;
  RingContext ring_;
};

void check_tree_input(const WeightedGraph& g, const TreePattern& t, const std::optional<double>& cap) {
  validate_tree(t);
  check_exact_input(g, t.k, cap);
}

}  // namespace

RingElement ktree_circuit_eval(const WeightedGraph& g, const TreePattern& t, Rng& rng, const RingContext& ring,
                               CircuitStats* stats) {
  if (g.has_negative_weight()) throw std::invalid_argument("ktree_circuit_eval: negative weight");
  const RootedTree rooted = root_tree(t);
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<GroupVector> lifts(n);
  for (auto& v : lifts) v = {static_cast<std::uint32_t>(rng.bits(ring->k()))};
  const std::vector<Arc> arcs = g.arcs();
  CircuitStats local;

  // memo[node][j] = C(node, j); sums[node][j] = sum over arcs j->j' of
  // y * z^w * C(node, j'), the factor node contributes to its parent at j.
  std::vector<std::vector<RingElement>> memo(static_cast<std::size_t>(t.k));
  std::vector<std::vector<RingElement>> sums(static_cast<std::size_t>(t.k));
  for (auto it = rooted.preorder.rbegin(); it != rooted.preorder.rend(); ++it) {
    const int node = *it;
    const auto& children = rooted.children[static_cast<std::size_t>(node)];
    auto& row = memo[static_cast<std::size_t>(node)];
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (children.empty()) {
        row.push_back(ra_product_of_lifted_vectors(ring, std::span(&lifts[j], 1)));
        continue;
      }
      RingElement product = sums[static_cast<std::size_t>(children.front())][j];
      for (std::size_t c = 1; c < children.size(); ++c) {
        product = ra_mul_fast(product, sums[static_cast<std::size_t>(children[c])][j]);
        ++local.product_gates;
      }
      RingElement lifted(ring);
      ra_lift_into(lifted, product, lifts[j]);
      row.push_back(std::move(lifted));
    }
    // Children's sums are consumed; release them.
    for (int c : children) sums[static_cast<std::size_t>(c)].clear();
    if (rooted.parent[static_cast<std::size_t>(node)] < 0) continue;

    auto& out = sums[static_cast<std::size_t>(node)];
    out.assign(n, RingElement(ring));
    for (const Arc& a : arcs) {
      const FieldElement y = gf_random(rng, ring->field().params());
      const RingElement& child = row[static_cast<std::size_t>(a.to)];
      ra_accumulate_term(out[static_cast<std::size_t>(a.from)], child, y, static_cast<int>(integer_weight(a.w)));
      ++local.term_gates;
    }
  }
  RingElement q(ring);
  for (const RingElement& c : memo[static_cast<std::size_t>(rooted.preorder.front())]) q += c;
  if (stats) *stats = local;
  return q;
}

std::optional<std::int64_t> min_ktree_weight_once(const WeightedGraph& g, const TreePattern& t, Rng& rng,
                                                  std::optional<double> cap) {
  check_tree_input(g, t, cap);
  if (t.k > g.n) return std::nullopt;
  if (t.k == 1) return 0;
  return TreeInstance(g, t, cap).run(rng);
}

SolveReport min_ktree_weight(const WeightedGraph& g, const TreePattern& t, const ExactConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  check_tree_input(g, t, cfg.cap);
  if (cfg.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  SolveReport report;
  report.seed = cfg.seed;
  report.repetitions_used = cfg.repetitions;
  if (t.k <= g.n) {
    if (t.k == 1) {
      report.weight = 0;
      report.vertices = {0};
    } else {
      const TreeInstance instance(g, t, cfg.cap);
      report.weight = amplify_min(cfg.repetitions, cfg.seed, cfg.threads,
                                  [&](std::uint64_t s) { return instance.run(s); });
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool ktree_attains(const WeightedGraph& g, const TreePattern& t, const ExactConfig& cfg, std::int64_t d) {
  check_tree_input(g, t, cfg.cap);
  if (t.k > g.n) return false;
  if (t.k == 1) return d == 0;
  const TreeInstance instance(g, t, cfg.cap);
  return amplify_attains(cfg.repetitions, cfg.seed, d, [&](std::uint64_t s) { return instance.run(s); });
}

std::optional<std::int64_t> KTreeOracle::weight(const WeightedGraph& g) const {
  count_call();
  return min_ktree_weight(g, tree_, cfg_).weight;
}

bool KTreeOracle::attains(const WeightedGraph& g, std::int64_t d) const {
  count_call();
  return ktree_attains(g, tree_, cfg_, d);
}

SolveReport recover_tree_vertices_with(const WeightedGraph& g, const TreePattern& t, const RecoverConfig& cfg,
                                       const WeightOracle& oracle) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  report.seed = cfg.inner.seed;
  report.repetitions_used = cfg.inner.repetitions;
  const auto d = oracle.weight(g);
  if (d) {
    report.weight = d;
    const Reduction gk = reduce_to_pattern_size(g, *d, cfg, oracle);
    OracleLimits limits;
    limits.max_n = std::max(t.k, 1);
    limits.max_tree_k = std::max(t.k, 1);
    const auto found = oracle_min_ktree(gk.graph, t, limits);
    if (!found || integer_weight(found->weight) != *d) {
      throw ExtractionFailed("no embedding of weight " + std::to_string(*d) + " on the reduced vertex set");
    }
    for (int v : found->mapping) report.vertices.push_back(gk.ids[static_cast<std::size_t>(v)]);
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SolveReport recover_tree_vertices(const WeightedGraph& g, const TreePattern& t, const RecoverConfig& cfg) {
  const KTreeOracle oracle(t, cfg.inner);
  return recover_tree_vertices_with(g, t, cfg, oracle);
}

std::optional<std::int64_t> KTreeProblem::solve(const WeightedGraph& g, std::optional<double> cap,
                                                std::uint64_t seed) const {
  ExactConfig cfg = inner_;
  cfg.k = tree_.k;
  cfg.seed = seed;
  cfg.cap = cap;
  return min_ktree_weight(g, tree_, cfg).weight;
}

std::vector<int> KTreeProblem::recover(const WeightedGraph& g, double cap, std::uint64_t seed) const {
  ExactConfig cfg = inner_;
  cfg.k = tree_.k;
  cfg.seed = seed;
  cfg.cap = cap;
  const SolveReport r = recover_tree_vertices(g, tree_, RecoverConfig::defaults(cfg, g.n));
  if (!r.weight) throw OracleFailure("capped tree solver lost its solution during recovery");
  return r.vertices;
}

double KTreeProblem::solution_weight(const WeightedGraph& g, const std::vector<int>& solution) const {
  const auto w = embedding_weight(g, tree_, solution);
  if (!w) throw OracleFailure("recovered mapping is not an embedding");
  return *w;
}

ApproxReport approx_min_ktree(const WeightedGraph& g, const TreePattern& t, const ApproxConfig& cfg) {
  validate_tree(t);
  ApproxConfig c = cfg;
  c.k = t.k;
  ExactConfig inner = cfg.inner;
  inner.k = t.k;
  return approximate(g, KTreeProblem(t, inner), c);
}

}  // namespace kpath
