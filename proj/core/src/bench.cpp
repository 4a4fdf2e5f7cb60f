#include "kpath/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <stdexcept>

#include "kpath/approx.hpp"
#include "kpath/exact.hpp"
#include "kpath/generators.hpp"
#include "kpath/ktree.hpp"

namespace kpath {
namespace {

struct Cell {
  BenchRow row;
  std::function<void(std::uint64_t)> solve;
  std::vector<double> times;
};

}  // namespace

std::vector<BenchRow> run_bench(const BenchGrid& grid) {
  if (grid.runs < 1) throw std::invalid_argument("bench: runs must be positive");
  if (grid.mode != "exact" && grid.mode != "tree" && grid.mode != "approx") {
    throw std::invalid_argument("bench: unknown mode '" + grid.mode + "'");
  }
  std::vector<Cell> cells;
  for (int k : grid.ks) {
    for (std::int64_t m : grid.ms) {
      // Same topology for every cell; only the weight range changes with M.
      Rng topology(stream_seed(grid.seed, 1));
      if (grid.mode == "approx") {
        auto g = std::make_shared<const WeightedGraph>(
            random_real_graph(grid.n, grid.edge_prob, true, 1.0, static_cast<double>(m), topology));
        for (double eps : grid.epsilons) {
          ApproxConfig cfg;
          cfg.k = k;
          cfg.epsilon = eps;
          cfg.inner.repetitions = grid.repetitions;
          cells.push_back({{grid.mode, k, grid.n, m, eps, 0.0}, [g, cfg](std::uint64_t seed) mutable {
                             cfg.seed = seed;
                             (void)approx_min_kpath(*g, cfg);
                           }, {}});
        }
        continue;
      }
      auto g = std::make_shared<const WeightedGraph>(
          random_graph(grid.n, grid.edge_prob, grid.mode == "exact", -m, m, topology));
      ExactConfig cfg;
      cfg.k = k;
      cfg.repetitions = grid.repetitions;
      if (grid.mode == "exact") {
        cells.push_back({{grid.mode, k, grid.n, m, 0.0, 0.0}, [g, cfg](std::uint64_t seed) mutable {
                           cfg.seed = seed;
                           (void)min_kpath_weight(*g, cfg);
                         }, {}});
      } else {
        Rng tree_rng(stream_seed(grid.seed, 2 + static_cast<std::uint64_t>(k)));
        auto t = std::make_shared<const TreePattern>(random_tree(k, tree_rng));
        cells.push_back({{grid.mode, k, grid.n, m, 0.0, 0.0}, [g, t, cfg](std::uint64_t seed) mutable {
                           cfg.seed = seed;
                           (void)min_ktree_weight(*g, *t, cfg);
                         }, {}});
      }
    }
  }

  // Round-robin over cells so slow drift of the machine hits every cell alike.
  for (int r = 0; r < grid.runs; ++r) {
    const std::uint64_t seed = stream_seed(grid.seed, 100 + static_cast<std::uint64_t>(r));
    for (Cell& c : cells) {
      const auto start = std::chrono::steady_clock::now();
      c.solve(seed);
      c.times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
  }
  std::vector<BenchRow> rows;
  for (Cell& c : cells) {
    std::sort(c.times.begin(), c.times.end());
    c.row.elapsed_ms = c.times[c.times.size() / 2];
    rows.push_back(c.row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "mode,k,n,M,eps,elapsed_ms\n";
  for (const BenchRow& r : rows) {
    out << r.mode << ',' << r.k << ',' << r.n << ',' << r.m << ',' << r.epsilon << ',' << r.elapsed_ms << '\n';
  }
}

}  // namespace kpath
