#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "addtrip/residue_set.hpp"
#include "addtrip/triple_count.hpp"

namespace {

using addtrip::ResidueSet;

// Half-density random set; fixed seed so runs are comparable.
ResidueSet random_half(std::int64_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> values;
  for (std::int64_t x = 0; x < p; ++x) {
    if (rng() & 1U) values.push_back(x);
  }
  return ResidueSet::make(p, values);
}

template <std::int64_t (*Count)(const ResidueSet&, const ResidueSet&)>
void BM_Count(benchmark::State& state) {
  const auto p = state.range(0);
  const auto a = random_half(p, 1);
  const auto b = random_half(p, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Count(a, b));
}

BENCHMARK(BM_Count<addtrip::count_naive>)->Name("count/naive")->Arg(31)->Arg(127)->Arg(509)->Arg(2039);
BENCHMARK(BM_Count<addtrip::count_shift>)->Name("count/shift")->Arg(31)->Arg(127)->Arg(509)->Arg(2039)->Arg(8191);
BENCHMARK(BM_Count<addtrip::count_layers>)->Name("count/layers")->Arg(31)->Arg(127)->Arg(509)->Arg(2039);
BENCHMARK(BM_Count<addtrip::count_convolution>)->Name("count/convolution")->Arg(31)->Arg(509)->Arg(8191)->Arg(131071);

}  // namespace
