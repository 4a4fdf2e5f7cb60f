#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kpath/approx.hpp"
#include "kpath/exact.hpp"
#include "kpath/graph.hpp"
#include "kpath/group_algebra.hpp"
#include "kpath/recover.hpp"
#include "kpath/tree.hpp"

namespace kpath {

struct CircuitStats {
  std::size_t term_gates = 0;     // y * z^w * C products, one per (tree edge, arc)
  std::size_t product_gates = 0;  // general ring products over children
  std::size_t gates() const { return term_gates + product_gates; }
};

// Evaluates Q = sum_j C(root, j) with
//   C(i, j) = x_j * prod_{children l of i} sum_{arcs j->j'} y * z^w(j,j') * C(l, j')
// at x_j = 1_G + v_j, bottom-up with one memo row per tree node. Weights
// must be nonnegative integers. Draw order: one k-bit vector per vertex,
// then for every non-root node in post-order one field value per arc (in
// arc-list order).
RingElement ktree_circuit_eval(const WeightedGraph& g, const TreePattern& t, Rng& rng, const RingContext& ring,
                               CircuitStats* stats = nullptr);

// One unamplified run (cap semantics as for k-paths).
std::optional<std::int64_t> min_ktree_weight_once(const WeightedGraph& g, const TreePattern& t, Rng& rng,
                                                  std::optional<double> cap = std::nullopt);

// Amplified minimum weight of a copy of t; cfg.k is ignored.
SolveReport min_ktree_weight(const WeightedGraph& g, const TreePattern& t, const ExactConfig& cfg);

bool ktree_attains(const WeightedGraph& g, const TreePattern& t, const ExactConfig& cfg, std::int64_t d);

class KTreeOracle final : public WeightOracle {
 public:
  KTreeOracle(TreePattern t, ExactConfig cfg) : tree_(std::move(t)), cfg_(cfg) {}

  int pattern_size() const override { return tree_.k; }
  std::optional<std::int64_t> weight(const WeightedGraph& g) const override;
  bool attains(const WeightedGraph& g, std::int64_t d) const override;

 private:
  TreePattern tree_;
  ExactConfig cfg_;
};

// Vertex reduction with the tree oracle, then exhaustive search on the k
// survivors. vertices[i] is the graph vertex hosting tree node i.
SolveReport recover_tree_vertices(const WeightedGraph& g, const TreePattern& t, const RecoverConfig& cfg);

SolveReport recover_tree_vertices_with(const WeightedGraph& g, const TreePattern& t, const RecoverConfig& cfg,
                                       const WeightOracle& oracle);

class KTreeProblem final : public CappedProblem {
 public:
  KTreeProblem(TreePattern t, ExactConfig inner) : tree_(std::move(t)), inner_(inner) {}

  int pattern_size() const override { return tree_.k; }
  std::optional<std::int64_t> solve(const WeightedGraph& g, std::optional<double> cap,
                                    std::uint64_t seed) const override;
  std::vector<int> recover(const WeightedGraph& g, double cap, std::uint64_t seed) const override;
  double solution_weight(const WeightedGraph& g, const std::vector<int>& solution) const override;

 private:
  TreePattern tree_;
  ExactConfig inner_;
};

ApproxReport approx_min_ktree(const WeightedGraph& g, const TreePattern& t, const ApproxConfig& cfg);

}  // namespace kpath
