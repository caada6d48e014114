#include <benchmark/benchmark.h>

#include "zkqbc/qbc.hpp"

namespace {

using namespace zkqbc;

void BM_MeasureCommitment(benchmark::State& state) {
  const optics::ApparatusParams p;
  const auto s = qbc::commit(1, p);
  Rng rng = make_stream(1, 0, StreamRole::Channel);
  for (auto _ : state) benchmark::DoNotOptimize(qbc::measure_commitment(s, p, rng));
}
BENCHMARK(BM_MeasureCommitment);

void BM_Discriminate(benchmark::State& state) {
  const optics::ApparatusParams p;
  Rng rng = make_stream(1, 0, StreamRole::Channel);
  int j = 0;
  for (auto _ : state) {
    const auto rec = qbc::measure_commitment(qbc::commit(j, p), p, rng);
    benchmark::DoNotOptimize(qbc::discriminate_unaided(rec));
    j = (j + 1) % 3;
  }
}
BENCHMARK(BM_Discriminate);

}  // namespace
