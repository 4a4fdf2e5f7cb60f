#include <benchmark/benchmark.h>

#include "kpath/group_algebra.hpp"

namespace {

using namespace kpath;

RingElement random_element(const RingContext& ctx, Rng& rng) {
  RingElement e(ctx);
  for (auto& c : e.raw()) c = static_cast<std::uint8_t>(rng.bits(ctx->field().ell()));
  return e;
}

void BM_GfMulTable(benchmark::State& state) {
  const GaloisField f(find_irreducible(static_cast<int>(state.range(0))));
  std::uint8_t acc = 1;
  for (auto _ : state) {
    for (std::uint32_t b = 1; b < f.order(); ++b) acc = f.mul(acc ^ static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(b));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (f.order() - 1));
}
BENCHMARK(BM_GfMulTable)->Arg(5)->Arg(8);

void BM_AccumulateTerm(benchmark::State& state) {
  auto ctx = make_ring(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(1);
  const RingElement src = random_element(ctx, rng);
  RingElement dst(ctx);
  for (auto _ : state) {
    ra_accumulate_term(dst, src, {3}, 2);
    benchmark::DoNotOptimize(dst.raw().data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(ctx->size()));
}
BENCHMARK(BM_AccumulateTerm)->Args({6, 50})->Args({10, 181});

void BM_LiftInto(benchmark::State& state) {
  auto ctx = make_ring(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(2);
  const RingElement src = random_element(ctx, rng);
  RingElement out(ctx);
  for (auto _ : state) {
    ra_lift_into(out, src, {5});
    benchmark::DoNotOptimize(out.raw().data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(ctx->size()));
}
BENCHMARK(BM_LiftInto)->Args({6, 50})->Args({10, 181});

void BM_MulNaive(benchmark::State& state) {
  auto ctx = make_ring(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(3);
  const RingElement p = random_element(ctx, rng);
  const RingElement q = random_element(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ra_mul_naive(p, q));
}
BENCHMARK(BM_MulNaive)->Args({4, 16})->Args({6, 50});

void BM_MulFast(benchmark::State& state) {
  auto ctx = make_ring(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(4);
  const RingElement p = random_element(ctx, rng);
  const RingElement q = random_element(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ra_mul_fast(p, q));
}
BENCHMARK(BM_MulFast)->Args({4, 16})->Args({6, 50})->Args({8, 64});

}  // namespace
