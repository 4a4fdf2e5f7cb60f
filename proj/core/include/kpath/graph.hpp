#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kpath {

enum class WeightKind { Integer, Real };

struct Edge {
  int u = 0;  // 0-based
  int v = 0;
  double w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed arc used by the solvers; undirected edges expand to two arcs.
struct Arc {
  int from;
  int to;
  double w;
};

// Vertices are 0..n-1 internally and 1..n in files and reports. Integer
// graphs keep their weights in the double field exactly (|w| < 2^53).
struct WeightedGraph {
  int n = 0;
  bool directed = true;
  WeightKind kind = WeightKind::Integer;
  std::vector<Edge> edges;

  std::vector<Arc> arcs() const;
  double min_weight() const;
  double max_weight() const;
  double max_abs_weight() const;
  bool has_negative_weight() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

std::int64_t integer_weight(double w);

// Subgraph induced by `keep` (sorted original ids), relabeled 0..|keep|-1.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> keep);

WeightedGraph without_edge(const WeightedGraph& g, std::size_t edge_index);

// Out-neighbour lists (both directions for undirected graphs).
std::vector<std::vector<Arc>> adjacency(const WeightedGraph& g);

// Sum of weights along consecutive vertices; throws std::invalid_argument
// if some consecutive pair is not an arc.
double path_weight(const WeightedGraph& g, std::span<const int> vertices);

bool is_simple_path(const WeightedGraph& g, std::span<const int> vertices);

}  // namespace kpath
