#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "graphs.hpp"
#include "kpath/generators.hpp"
#include "kpath/oracle.hpp"

namespace kpath {
namespace {

using testing::make_graph;

TEST(OracleMinKPath, PathGraph) {
  const auto r = oracle_min_kpath(testing::path3(), 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->weight, 12);
  EXPECT_EQ(r->vertices, (std::vector<int>{0, 1, 2}));
}

TEST(OracleMinKPath, KExceedsN) { EXPECT_FALSE(oracle_min_kpath(testing::path3(), 4).has_value()); }

TEST(OracleMinKPath, CompleteDigraph) {
  WeightedGraph g;
  g.n = 4;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (u != v) g.edges.push_back({u, v, 1});
    }
  }
  EXPECT_EQ(oracle_min_kpath(g, 3)->weight, 2);
  EXPECT_EQ(oracle_min_kpath(g, 3)->vertices, (std::vector<int>{0, 1, 2}));
}

TEST(OracleMinKPath, SingleVertexPath) {
  const auto r = oracle_min_kpath(testing::path3(), 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->weight, 0);
  EXPECT_EQ(r->vertices, std::vector<int>{0});
}

TEST(OracleMinKPath, UndirectedUsesBothOrientations) {
  const auto g = make_graph(3, false, {{2, 1, 4}, {3, 2, 6}});
  const auto r = oracle_min_kpath(g, 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->weight, 10);
  EXPECT_EQ(r->vertices, (std::vector<int>{0, 1, 2}));
}

TEST(OracleMinKPath, GoldenSeededGraphs) {
  struct Golden {
    std::uint64_t seed;
    double weight;
    std::vector<int> path;
  };
  const std::vector<Golden> goldens{{1, 1, {3, 1, 4, 7}}, {2, 4, {2, 7, 0, 1}}, {3, 6, {7, 6, 0, 1}}};
  for (const auto& gold : goldens) {
    Rng rng(gold.seed);
    const WeightedGraph g = random_graph(8, 0.4, true, 0, 10, rng);
    const auto r = oracle_min_kpath(g, 4);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->weight, gold.weight);
    EXPECT_EQ(r->vertices, gold.path);
    EXPECT_TRUE(is_simple_path(g, r->vertices));
    EXPECT_EQ(path_weight(g, r->vertices), r->weight);
  }
}

TEST(OracleMinKPath, DpMatchesEnumeration) {
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const bool directed = i % 2 == 0;
    const int n = 4 + i % 5;
    const WeightedGraph g = random_graph(n, 0.45, directed, -10, 10, rng);
    for (int k = 1; k <= n; ++k) {
      const auto dp = oracle_min_kpath(g, k, OracleStrategy::SubsetDp);
      const auto en = oracle_min_kpath(g, k, OracleStrategy::Enumeration);
      ASSERT_EQ(dp.has_value(), en.has_value());
      if (dp) {
        EXPECT_EQ(dp->weight, en->weight);
        EXPECT_EQ(dp->vertices, en->vertices);
      }
    }
  }
}

TEST(OracleMinKPath, LimitExceeded) {
  WeightedGraph g;
  g.n = 17;
  EXPECT_THROW(oracle_min_kpath(g, 3), LimitExceeded);
}

TEST(OracleWeights, TriangleGolden) {
  EXPECT_EQ(oracle_kpath_weights(testing::directed_triangle(), 3), (std::vector<double>{3, 5, 6}));
}

TEST(OracleWeights, SingletonAndEmpty) {
  EXPECT_EQ(oracle_kpath_weights(testing::path3(), 3), std::vector<double>{12});
  EXPECT_TRUE(oracle_kpath_weights(testing::path3(), 4).empty());
}

TEST(OracleWeights, MinimumIsOracleWeight) {
  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    const WeightedGraph g = random_graph(7, 0.4, true, -5, 5, rng);
    const auto weights = oracle_kpath_weights(g, 4);
    const auto best = oracle_min_kpath(g, 4);
    ASSERT_EQ(weights.empty(), !best.has_value());
    if (best) {
      EXPECT_EQ(weights.front(), best->weight);
      EXPECT_TRUE(std::is_sorted(weights.begin(), weights.end()));
    }
  }
}

TEST(OracleMinKTree, SingleNode) {
  const auto r = oracle_min_ktree(testing::path3(), TreePattern{1, {}});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->weight, 0);
  EXPECT_EQ(r->mapping.size(), 1u);
}

TEST(OracleMinKTree, StarOnTriangleGolden) {
  const auto r = oracle_min_ktree(testing::undirected_triangle(), TreePattern::star(3));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->weight, 3);
  EXPECT_EQ(r->mapping[0], 1);  // vertex 2, shared by the weight-1 and weight-2 edges
}

TEST(OracleMinKTree, GoldenSeededTree) {
  Rng rng(11);
  const WeightedGraph g = random_graph(7, 0.5, false, -10, 10, rng);
  const TreePattern t = random_tree(4, rng);
  const auto r = oracle_min_ktree(g, t);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->weight, -14);
  EXPECT_EQ(r->mapping, (std::vector<int>{2, 3, 4, 6}));
  EXPECT_EQ(embedding_weight(g, t, r->mapping), r->weight);
}

TEST(OracleMinKTree, PathPatternMatchesPathOracle) {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const WeightedGraph g = random_graph(7, 0.45, false, -10, 10, rng);
    for (int k = 2; k <= 5; ++k) {
      const auto tree = oracle_min_ktree(g, TreePattern::path(k));
      const auto path = oracle_min_kpath(g, k);
      ASSERT_EQ(tree.has_value(), path.has_value());
      if (tree) EXPECT_EQ(tree->weight, path->weight);
    }
  }
}

TEST(OracleMinKTree, MinimumOfWeightSet) {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const WeightedGraph g = random_graph(6, 0.5, i % 2 == 0, -5, 5, rng);
    const TreePattern t = random_tree(4, rng);
    const auto weights = oracle_ktree_weights(g, t);
    const auto best = oracle_min_ktree(g, t);
    ASSERT_EQ(weights.empty(), !best.has_value());
    if (best) EXPECT_EQ(weights.front(), best->weight);
  }
}

TEST(EmbeddingWeight, RejectsNonInjectiveOrMissingEdges) {
  const TreePattern star = TreePattern::star(3);
  EXPECT_FALSE(embedding_weight(testing::undirected_triangle(), star, {0, 1, 1}).has_value());
  EXPECT_FALSE(embedding_weight(testing::path3(), star, {0, 1, 2}).has_value());
  EXPECT_EQ(embedding_weight(testing::undirected_triangle(), star, {0, 1, 2}), 5);
}

TEST(SameWeight, RelativeTolerance) {
  EXPECT_TRUE(same_weight(1e6, 1e6 + 1e-4));
  EXPECT_FALSE(same_weight(1.0, 1.001));
  EXPECT_FALSE(same_weight(std::numeric_limits<double>::infinity(), 3.0));
}

}  // namespace
}  // namespace kpath
