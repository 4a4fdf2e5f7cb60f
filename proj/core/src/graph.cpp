#include "kpath/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kpath {

std::vector<Arc> WeightedGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(directed ? edges.size() : 2 * edges.size());
  for (const Edge& e : edges) {
    out.push_back({e.u, e.v, e.w});
    if (!directed && e.u != e.v) out.push_back({e.v, e.u, e.w});
  }
  return out;
}

double WeightedGraph::min_weight() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges) m = std::min(m, e.w);
  return edges.empty() ? 0.0 : m;
}

double WeightedGraph::max_weight() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const Edge& e : edges) m = std::max(m, e.w);
  return edges.empty() ? 0.0 : m;
}

double WeightedGraph::max_abs_weight() const {
  double m = 0.0;
  for (const Edge& e : edges) m = std::max(m, std::abs(e.w));
  return m;
}

bool WeightedGraph::has_negative_weight() const {
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.w < 0; });
}

std::int64_t integer_weight(double w) { return static_cast<std::int64_t>(std::llround(w)); }

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> keep) {
  std::vector<int> relabel(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  WeightedGraph sub;
  sub.n = static_cast<int>(keep.size());
  sub.directed = g.directed;
  sub.kind = g.kind;
  for (const Edge& e : g.edges) {
    const int a = relabel[static_cast<std::size_t>(e.u)];
    const int b = relabel[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) sub.edges.push_back({a, b, e.w});
  }
  return sub;
}

WeightedGraph without_edge(const WeightedGraph& g, std::size_t edge_index) {
  WeightedGraph out = g;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return out;
}

std::vector<std::vector<Arc>> adjacency(const WeightedGraph& g) {
  std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(g.n));
  for (const Arc& a : g.arcs()) adj[static_cast<std::size_t>(a.from)].push_back(a);
  return adj;
}

double path_weight(const WeightedGraph& g, std::span<const int> vertices) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const int a = vertices[i];
    const int b = vertices[i + 1];
    bool found = false;
    for (const Edge& e : g.edges) {
      if ((e.u == a && e.v == b) || (!g.directed && e.u == b && e.v == a)) {
        total += e.w;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("path_weight: consecutive vertices are not adjacent");
  }
  return total;
}

bool is_simple_path(const WeightedGraph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (std::any_of(sorted.begin(), sorted.end(), [&](int v) { return v < 0 || v >= g.n; })) return false;
  try {
    path_weight(g, vertices);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

}  // namespace kpath
