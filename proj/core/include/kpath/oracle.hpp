#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/tree.hpp"

namespace kpath {

// Exhaustive reference solvers. They work on real or integer weights and
// are meant for n up to ~16.

struct OracleLimits {
  int max_n = 16;
  std::size_t max_enumeration = 50'000'000;  // search nodes before giving up
  int max_tree_k = 10;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OracleStrategy { SubsetDp, Enumeration };

struct OraclePath {
  double weight;
  std::vector<int> vertices;  // lexicographically smallest optimal path
};

struct OracleEmbedding {
  double weight;
  std::vector<int> mapping;  // mapping[tree node] = graph vertex
};

std::optional<OraclePath> oracle_min_kpath(const WeightedGraph& g, int k,
                                           OracleStrategy strategy = OracleStrategy::SubsetDp,
                                           const OracleLimits& limits = {});

// Sorted, distinct weights of all simple k-paths.
std::vector<double> oracle_kpath_weights(const WeightedGraph& g, int k, const OracleLimits& limits = {});

// Minimum-weight injective homomorphism of t into g. For directed graphs
// every tree edge, oriented away from the root, must map onto an arc.
std::optional<OracleEmbedding> oracle_min_ktree(const WeightedGraph& g, const TreePattern& t,
                                                const OracleLimits& limits = {});

// Sorted, distinct weights of all injective homomorphisms.
std::vector<double> oracle_ktree_weights(const WeightedGraph& g, const TreePattern& t,
                                         const OracleLimits& limits = {});

// Weight of a mapping, or nullopt if it is not an injective homomorphism.
std::optional<double> embedding_weight(const WeightedGraph& g, const TreePattern& t, const std::vector<int>& mapping);

// Comparison used by the oracles for real weights.
bool same_weight(double a, double b);

}  // namespace kpath
