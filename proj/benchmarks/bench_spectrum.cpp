#include <benchmark/benchmark.h>

#include "addtrip/spectrum.hpp"

namespace {

void BM_Exhaustive(benchmark::State& state) {
  const auto p = state.range(0);
  addtrip::SpectrumOptions options;
  options.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(addtrip::spectrum_exhaustive(p, p / 2, p / 2, options));
}
BENCHMARK(BM_Exhaustive)->Name("spectrum/exhaustive")->Args({11, 1})->Args({13, 1})->Args({13, 4})->Unit(benchmark::kMillisecond);

void BM_MultisetDp(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(addtrip::spectrum_multiset_dp(p, p / 3, p / 2));
}
BENCHMARK(BM_MultisetDp)->Name("spectrum/multiset_dp")->Arg(31)->Arg(127)->Arg(509)->Unit(benchmark::kMicrosecond);

void BM_Schur(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(addtrip::schur_spectrum(p, p / 3));
}
BENCHMARK(BM_Schur)->Name("spectrum/schur")->DenseRange(13, 19, 6)->Unit(benchmark::kMillisecond);

}  // namespace
