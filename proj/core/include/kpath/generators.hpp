#pragma once

#include <cstdint>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/rng.hpp"
#include "kpath/tree.hpp"

namespace kpath {

// G(n, p) with integer weights uniform in [lo, hi]. Undirected graphs draw
// each unordered pair once.
WeightedGraph random_graph(int n, double edge_prob, bool directed, std::int64_t lo, std::int64_t hi, Rng& rng);

// G(n, p) with real weights uniform in [lo, hi].
WeightedGraph random_real_graph(int n, double edge_prob, bool directed, double lo, double hi, Rng& rng);

struct PlantedInstance {
  WeightedGraph graph;
  std::vector<int> path;  // planted vertices in order
  std::int64_t weight;
};

// A directed G(n, p) whose arcs weigh at least k, plus a planted k-path of
// unit arcs (weight k-1). Every other k-path uses a heavy arc, so the
// planted path is the unique strict minimum.
PlantedInstance planted_path_instance(int n, int k, double edge_prob, Rng& rng);

// Uniform random labelled tree on k nodes (Pruefer sequence).
TreePattern random_tree(int k, Rng& rng);

}  // namespace kpath
