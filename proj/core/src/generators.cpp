#include "kpath/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kpath {
namespace {

template <class Weight>
WeightedGraph gnp(int n, double p, bool directed, WeightKind kind, Rng& rng, Weight&& weight) {
  WeightedGraph g;
  g.n = n;
  g.directed = directed;
  g.kind = kind;
  for (int u = 0; u < n; ++u) {
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (rng.bernoulli(p)) g.edges.push_back({u, v, weight()});
    }
  }
  return g;
}

}  // namespace

WeightedGraph random_graph(int n, double edge_prob, bool directed, std::int64_t lo, std::int64_t hi, Rng& rng) {
  return gnp(n, edge_prob, directed, WeightKind::Integer, rng,
             [&] { return static_cast<double>(rng.uniform_int(lo, hi)); });
}

WeightedGraph random_real_graph(int n, double edge_prob, bool directed, double lo, double hi, Rng& rng) {
  return gnp(n, edge_prob, directed, WeightKind::Real, rng, [&] { return rng.uniform_real(lo, hi); });
}

PlantedInstance planted_path_instance(int n, int k, double edge_prob, Rng& rng) {
  constexpr std::int64_t light = 1;
  const std::int64_t heavy_lo = (k - 1) * light + 1;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }
  PlantedInstance inst;
  inst.path.assign(order.begin(), order.begin() + k);
  inst.weight = (k - 1) * light;
  inst.graph.n = n;
  inst.graph.directed = true;
  std::set<std::pair<int, int>> planted;
  for (int i = 0; i + 1 < k; ++i) {
    const int a = inst.path[static_cast<std::size_t>(i)];
    const int b = inst.path[static_cast<std::size_t>(i + 1)];
    inst.graph.edges.push_back({a, b, static_cast<double>(light)});
    planted.insert({a, b});
  }
  const WeightedGraph noise = random_graph(n, edge_prob, true, heavy_lo, heavy_lo + 3 * k, rng);
  for (const Edge& e : noise.edges) {
    if (!planted.contains({e.u, e.v})) inst.graph.edges.push_back(e);
  }
  return inst;
}

TreePattern random_tree(int k, Rng& rng) {
  TreePattern t{k, {}};
  if (k <= 1) return t;
  if (k == 2) {
    t.edges.emplace_back(0, 1);
    return t;
  }
  std::vector<int> code(static_cast<std::size_t>(k - 2));
  for (int& c : code) c = static_cast<int>(rng.uniform_int(0, k - 1));
  std::vector<int> degree(static_cast<std::size_t>(k), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  for (int c : code) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    t.edges.emplace_back(leaf, c);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(c)];
  }
  int a = -1;
  for (int v = 0; v < k; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (a < 0) {
      a = v;
    } else {
      t.edges.emplace_back(a, v);
    }
  }
  return t;
}

}  // namespace kpath
