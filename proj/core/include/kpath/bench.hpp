#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kpath {

// Parameter grid for the scaling harness. Every (k, M, eps) cell solves
// one random instance `runs` times and reports the median wall time.
struct BenchGrid {
  std::string mode = "exact";  // exact | approx | tree
  int n = 30;
  std::vector<int> ks{4, 5, 6};
  std::vector<std::int64_t> ms{10};
  std::vector<double> epsilons{0.1};  // approx only
  int runs = 3;
  int repetitions = 1;
  double edge_prob = 0.2;
  std::uint64_t seed = 0xC0FFEE;
};

struct BenchRow {
  std::string mode;
  int k;
  int n;
  std::int64_t m;
  double epsilon;  // 0 outside approx mode
  double elapsed_ms;
};

std::vector<BenchRow> run_bench(const BenchGrid& grid);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace kpath
