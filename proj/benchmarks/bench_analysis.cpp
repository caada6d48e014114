#include <benchmark/benchmark.h>

#include "zkqbc/analysis.hpp"

namespace {

using namespace zkqbc;

void BM_AnalyticPb(benchmark::State& state) {
  const optics::ApparatusParams p;
  for (auto _ : state) benchmark::DoNotOptimize(analysis::analytic_pb(p));
}
BENCHMARK(BM_AnalyticPb);

void BM_OptimalCheat(benchmark::State& state) {
  const optics::ApparatusParams p;
  analysis::CheatSearchOptions opt;
  opt.grid_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analysis::optimal_cheat_state({0, 2}, p, opt));
}
BENCHMARK(BM_OptimalCheat)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace
