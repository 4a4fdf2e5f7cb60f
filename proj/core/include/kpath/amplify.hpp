#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "kpath/rng.hpp"

namespace kpath {

// Minimum of `run(stream_seed(seed, r))` over r < repetitions. Runs are
// distributed over up to `threads` workers; the reduction is a minimum, so
// the result is identical for any thread count.
inline std::optional<std::int64_t> amplify_min(
    int repetitions, std::uint64_t seed, int threads,
    const std::function<std::optional<std::int64_t>(std::uint64_t)>& run) {
  std::vector<std::optional<std::int64_t>> results(static_cast<std::size_t>(std::max(repetitions, 0)));
  const int workers = std::clamp(threads, 1, std::max(repetitions, 1));
  if (workers == 1) {
    for (int r = 0; r < repetitions; ++r) results[static_cast<std::size_t>(r)] = run(stream_seed(seed, r));
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (int r = next++; r < repetitions; r = next++) results[static_cast<std::size_t>(r)] = run(stream_seed(seed, r));
      });
    }
    for (auto& th : pool) th.join();
  }
  std::optional<std::int64_t> best;
  for (const auto& r : results) {
    if (r && (!best || *r < *best)) best = r;
  }
  return best;
}

// Sequential early-exit variant: true as soon as a run returns exactly d,
// false if a run returns less than d or all runs miss.
inline bool amplify_attains(int repetitions, std::uint64_t seed, std::int64_t d,
                            const std::function<std::optional<std::int64_t>(std::uint64_t)>& run) {
  for (int r = 0; r < repetitions; ++r) {
    const auto got = run(stream_seed(seed, r));
    if (!got) continue;
    if (*got == d) return true;
    if (*got < d) return false;
  }
  return false;
}

}  // namespace kpath
