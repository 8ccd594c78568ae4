#include <benchmark/benchmark.h>

#include <random>

#include "satlink/catalog.hpp"
#include "satlink/cyclic_cover.hpp"
#include "satlink/downhill.hpp"
#include "satlink/obstruction.hpp"

using namespace satlink;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 21) - 10;
  return m;
}

void BM_det(benchmark::State& state) {
  const IntMatrix m = random_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_det)->RangeMultiplier(2)->Range(4, 64);

void BM_smith(benchmark::State& state) {
  const IntMatrix m = random_matrix(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_smith)->RangeMultiplier(2)->Range(4, 32);

void BM_build_cover(benchmark::State& state) {
  const AnnularWord w = compile(random_presentation(12, 6, 3));
  for (auto _ : state) benchmark::DoNotOptimize(build_cover(w, state.range(0)));
}
BENCHMARK(BM_build_cover)->Arg(2)->Arg(4)->Arg(12);

void BM_auto_verdict(benchmark::State& state) {
  const ClaspPresentation p = random_presentation(12, state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(auto_verdict(p, {2, 4}));
}
BENCHMARK(BM_auto_verdict)->Arg(0)->Arg(3)->Arg(6);

void BM_winding8(benchmark::State& state) {
  const ClaspPresentation p = catalog::winding8_inconclusive();
  for (auto _ : state) benchmark::DoNotOptimize(auto_verdict(p, {2, 4, 8}));
}
BENCHMARK(BM_winding8);

void BM_normalize(benchmark::State& state) {
  const AnnularWord w = random_pattern_word(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w));
}
BENCHMARK(BM_normalize)->Arg(2)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
