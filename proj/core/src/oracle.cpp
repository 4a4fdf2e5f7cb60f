#include "kpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace kpath {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// weight[u][v] of the first edge joining u to v, or +inf.
std::vector<std::vector<double>> weight_matrix(const WeightedGraph& g) {
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, kInf));
  std::vector<std::vector<char>> set(n, std::vector<char>(n, 0));
  for (const Arc& a : g.arcs()) {
    auto& s = set[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)];
    if (s) continue;
    s = 1;
    m[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)] = a.w;
  }
  return m;
}

void check_size(const WeightedGraph& g, const OracleLimits& limits) {
  if (g.n > limits.max_n) {
    throw LimitExceeded("oracle: n = " + std::to_string(g.n) + " exceeds max_n = " + std::to_string(limits.max_n));
  }
}

class PathEnumerator {
 public:
  PathEnumerator(const WeightedGraph& g, int k, const OracleLimits& limits)
      : w_(weight_matrix(g)), n_(g.n), k_(k), limits_(limits), used_(static_cast<std::size_t>(g.n), 0) {}

  template <class Visit>
  void run(Visit&& visit) {
    for (int s = 0; s < n_; ++s) extend(s, 0.0, visit);
  }

 private:
  template <class Visit>
  void extend(int v, double partial, Visit& visit) {
    if (++nodes_ > limits_.max_enumeration) throw LimitExceeded("oracle: enumeration budget exhausted");
    used_[static_cast<std::size_t>(v)] = 1;
    path_.push_back(v);
    if (static_cast<int>(path_.size()) == k_) {
      visit(partial, path_);
    } else {
      for (int u = 0; u < n_; ++u) {
        const double w = w_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        if (used_[static_cast<std::size_t>(u)] || w == kInf) continue;
        extend(u, partial + w, visit);
      }
    }
    path_.pop_back();
    used_[static_cast<std::size_t>(v)] = 0;
  }

  std::vector<std::vector<double>> w_;
  int n_;
  int k_;
  OracleLimits limits_;
  std::vector<char> used_;
  std::vector<int> path_;
  std::size_t nodes_ = 0;
};

std::optional<OraclePath> min_kpath_by_enumeration(const WeightedGraph& g, int k, const OracleLimits& limits) {
  std::optional<OraclePath> best;
  PathEnumerator(g, k, limits).run([&](double w, const std::vector<int>& p) {
    // Paths arrive in lexicographic order; only a strictly better weight
    // replaces the incumbent.
    if (!best || (w < best->weight && !same_weight(w, best->weight))) best = OraclePath{w, p};
  });
  return best;
}

// start[mask][v]: lightest simple path that begins at v and visits exactly
// the vertices of mask. Only masks with at most k vertices are filled.
std::optional<OraclePath> min_kpath_by_subset_dp(const WeightedGraph& g, int k, const OracleLimits& limits) {
  const auto n = static_cast<std::size_t>(g.n);
  const auto w = weight_matrix(g);
  const std::size_t masks = std::size_t{1} << n;
  std::vector<double> start(masks * n, kInf);
  auto at = [&](std::size_t mask, std::size_t v) -> double& { return start[mask * n + v]; };
  for (std::size_t v = 0; v < n; ++v) at(std::size_t{1} << v, v) = 0.0;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || size > k) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1U)) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << v);
      double best = kInf;
      for (std::size_t u = 0; u < n; ++u) {
        if (!(rest >> u & 1U) || w[v][u] == kInf) continue;
        best = std::min(best, w[v][u] + at(rest, u));
      }
      at(mask, v) = best;
    }
  }
  double opt = kInf;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    if (std::popcount(mask) != k) continue;
    for (std::size_t v = 0; v < n; ++v) opt = std::min(opt, at(mask, v));
  }
  if (opt == kInf) return std::nullopt;

  // Lightest continuation from v through exactly `count` vertices avoiding
  // `used` (v itself excluded from `used`).
  auto completion = [&](std::size_t v, std::size_t used, int count) {
    double best = kInf;
    for (std::size_t mask = 1; mask < masks; ++mask) {
      if (std::popcount(mask) != count || !(mask >> v & 1U) || (mask & used)) continue;
      best = std::min(best, at(mask, v));
    }
    return best;
  };

  // Greedy lexicographic reconstruction: always take the smallest next
  // vertex that still admits an optimal completion.
  OraclePath result{opt, {}};
  std::size_t used = 0;
  double partial = 0.0;
  std::size_t current = n;
  for (int step = 0; step < k; ++step) {
    const int remaining = k - step;
    bool extended = false;
    for (std::size_t u = 0; u < n && !extended; ++u) {
      if (used >> u & 1U) continue;
      const double edge = current == n ? 0.0 : w[current][u];
      if (edge == kInf) continue;
      if (same_weight(partial + edge + completion(u, used, remaining), opt)) {
        partial += edge;
        used |= std::size_t{1} << u;
        current = u;
        result.vertices.push_back(static_cast<int>(u));
        extended = true;
      }
    }
    if (!extended) throw std::logic_error("oracle: reconstruction lost the optimum");
  }
  (void)limits;
  return result;
}

struct TreeSearch {
  const WeightedGraph& g;
  const TreePattern& t;
  const OracleLimits& limits;
  std::vector<std::vector<double>> w;
  RootedTree rooted;
  double min_edge = 0.0;
  std::vector<int> mapping;
  std::vector<char> used;
  std::size_t nodes = 0;

  TreeSearch(const WeightedGraph& graph, const TreePattern& tree, const OracleLimits& lim)
      : g(graph), t(tree), limits(lim), w(weight_matrix(graph)), rooted(root_tree(tree)) {
    min_edge = g.edges.empty() ? 0.0 : g.min_weight();
    mapping.assign(static_cast<std::size_t>(t.k), -1);
    used.assign(static_cast<std::size_t>(g.n), 0);
  }

  // Depth-first over preorder positions; `visit(weight, mapping)` receives
  // each complete injective homomorphism unless `prune(partial, remaining)`
  // rejects the branch first.
  template <class Visit, class Prune>
  void search(std::size_t pos, double partial, Visit& visit, Prune& prune) {
    if (++nodes > limits.max_enumeration) throw LimitExceeded("oracle: enumeration budget exhausted");
    if (pos == rooted.preorder.size()) {
      visit(partial, mapping);
      return;
    }
    const int node = rooted.preorder[pos];
    const int parent = rooted.parent[static_cast<std::size_t>(node)];
    const auto remaining = static_cast<double>(rooted.preorder.size() - pos - 1);
    for (int v = 0; v < g.n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      double edge = 0.0;
      if (parent >= 0) {
        edge = w[static_cast<std::size_t>(mapping[static_cast<std::size_t>(parent)])][static_cast<std::size_t>(v)];
        if (edge == kInf) continue;
      }
      if (prune(partial + edge, remaining)) continue;
      mapping[static_cast<std::size_t>(node)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      search(pos + 1, partial + edge, visit, prune);
      used[static_cast<std::size_t>(v)] = 0;
      mapping[static_cast<std::size_t>(node)] = -1;
    }
  }
};

void check_tree_size(const TreePattern& t, const OracleLimits& limits) {
  if (t.k > limits.max_tree_k) {
    throw LimitExceeded("oracle: tree size " + std::to_string(t.k) + " exceeds max_tree_k");
  }
}

}  // namespace

bool same_weight(double a, double b) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::optional<OraclePath> oracle_min_kpath(const WeightedGraph& g, int k, OracleStrategy strategy,
                                           const OracleLimits& limits) {
  check_size(g, limits);
  if (k < 1 || k > g.n) return std::nullopt;
  if (strategy == OracleStrategy::Enumeration) return min_kpath_by_enumeration(g, k, limits);
  return min_kpath_by_subset_dp(g, k, limits);
}

std::vector<double> oracle_kpath_weights(const WeightedGraph& g, int k, const OracleLimits& limits) {
  check_size(g, limits);
  std::vector<double> weights;
  if (k < 1 || k > g.n) return weights;
  PathEnumerator(g, k, limits).run([&](double w, const std::vector<int>&) { weights.push_back(w); });
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end(), same_weight), weights.end());
  return weights;
}

std::optional<OracleEmbedding> oracle_min_ktree(const WeightedGraph& g, const TreePattern& t,
                                                const OracleLimits& limits) {
  check_size(g, limits);
  check_tree_size(t, limits);
  if (t.k > g.n) return std::nullopt;
  TreeSearch search(g, t, limits);
  std::optional<OracleEmbedding> best;
  auto visit = [&](double w, const std::vector<int>& m) {
    if (!best || (w < best->weight && !same_weight(w, best->weight))) {
      best = OracleEmbedding{w, m};
    } else if (same_weight(w, best->weight) && m < best->mapping) {
      best->mapping = m;
    }
  };
  auto prune = [&](double partial, double remaining) {
    if (!best) return false;
    // min_edge bounds every remaining tree edge from below, negative or not.
    const double optimistic = partial + remaining * search.min_edge;
    return optimistic > best->weight && !same_weight(optimistic, best->weight);
  };
  search.search(0, 0.0, visit, prune);
  return best;
}

std::vector<double> oracle_ktree_weights(const WeightedGraph& g, const TreePattern& t, const OracleLimits& limits) {
  check_size(g, limits);
  check_tree_size(t, limits);
  std::vector<double> weights;
  if (t.k > g.n) return weights;
  TreeSearch search(g, t, limits);
  auto visit = [&](double w, const std::vector<int>&) { weights.push_back(w); };
  auto prune = [](double, double) { return false; };
  search.search(0, 0.0, visit, prune);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end(), same_weight), weights.end());
  return weights;
}

std::optional<double> embedding_weight(const WeightedGraph& g, const TreePattern& t, const std::vector<int>& mapping) {
  if (static_cast<int>(mapping.size()) != t.k) return std::nullopt;
  std::vector<int> sorted = mapping;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.n)) return std::nullopt;
  const auto w = weight_matrix(g);
  const RootedTree rooted = root_tree(t);
  double total = 0.0;
  for (int node = 0; node < t.k; ++node) {
    const int parent = rooted.parent[static_cast<std::size_t>(node)];
    if (parent < 0) continue;
    const double e = w[static_cast<std::size_t>(mapping[static_cast<std::size_t>(parent)])]
                      [static_cast<std::size_t>(mapping[static_cast<std::size_t>(node)])];
    if (e == kInf) return std::nullopt;
    total += e;
  }
  return total;
}

}  // namespace kpath
