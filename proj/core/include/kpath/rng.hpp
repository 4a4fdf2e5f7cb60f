#pragma once

#include <cstdint>
#include <random>

namespace kpath {

// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of the r-th stream derived from a base seed. Streams are
// order-independent: stream r never depends on how many values
// other streams consumed.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index + 0x5851F42D4C957F2DULL));
}

// Deterministic generator. Only raw engine bits are used so draws are
// reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform over [0, 2^width).
  std::uint64_t bits(int width) {
    if (width <= 0) return 0;
    const std::uint64_t raw = engine_();
    return width >= 64 ? raw : raw & ((std::uint64_t{1} << width) - 1);
  }

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [lo, hi] (inclusive). Rejection sampling keeps it exact.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kpath
