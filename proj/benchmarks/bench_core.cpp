#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "cookiedim/boxdim.hpp"
#include "cookiedim/dimension.hpp"
#include "cookiedim/scenarios.hpp"
#include "cookiedim/thermo.hpp"

using namespace cookiedim;

namespace {

void BM_MoranDimension(benchmark::State& state) {
  std::vector<double> ratios = {1.0 / 3, 1.0 / 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(moran_dimension(ratios).root);
}
BENCHMARK(BM_MoranDimension);

void BM_PartitionEnumerate(benchmark::State& state) {
  SystemFamily fam({scenarios::middle_thirds()});
  std::vector<int> letters(static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        partition_function(fam, letters, 0.5, PartitionRoute::Enumerate));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartitionEnumerate)->Arg(8)->Arg(12)->Arg(16);

void BM_PartitionAffineFastPath(benchmark::State& state) {
  SystemFamily fam({scenarios::middle_thirds()});
  std::vector<int> letters(static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        partition_function(fam, letters, 0.5, PartitionRoute::Auto));
}
BENCHMARK(BM_PartitionAffineFastPath)->Arg(16)->Arg(64);

void BM_BowenRootMoebiusPair(benchmark::State& state) {
  SystemFamily fam = scenarios::moebius_reflection_pair(0.001);
  std::vector<int> letters;
  for (int i = 0; i < state.range(0); ++i) letters.push_back(i % 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(bowen_root(fam, letters).root);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BowenRootMoebiusPair)->Arg(8)->Arg(10)->Arg(12);

void BM_CoverCount(benchmark::State& state) {
  SystemFamily fam({scenarios::quarter_system()});
  SymbolSequence seq = block_sequence({{{0}, 10}}, 1);
  std::vector<WordInterval> ivs = cantor_intervals(fam, seq, 10);
  double eps = std::pow(4.0, -6.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(cover_count(ivs, eps).count);
}
BENCHMARK(BM_CoverCount);

void BM_SequenceStats(benchmark::State& state) {
  SymbolSequence seq =
      rule_sequence({{0}, {1}}, GrowthRule::Geometric, 4.0, 24, 2);
  std::int64_t n = seq.length() - 7;
  for (auto _ : state)
    benchmark::DoNotOptimize(stats(seq, n).switch_count);
}
BENCHMARK(BM_SequenceStats);

void BM_StationarySweepPoint(benchmark::State& state) {
  ParametricFamily fam = scenarios::crossing_moran_families();
  for (auto _ : state) {
    SystemFamily inst = instantiate(fam, 0.27);
    benchmark::DoNotOptimize(stationary_dimension(inst.system(0)).value);
  }
}
BENCHMARK(BM_StationarySweepPoint);

}  // namespace

BENCHMARK_MAIN();
