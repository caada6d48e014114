#include <string>

#include <benchmark/benchmark.h>

#include "zkqbc/dimacs.hpp"
#include "zkqbc/protocol.hpp"

namespace {

using namespace zkqbc;

// One full honest execution; petersen is 225 rounds.
void BM_HonestRun(benchmark::State& state, const char* name) {
  const auto g = dimacs::load(std::string(ZKQBC_GRAPH_DIR) + "/" + name + ".col");
  const auto c = *graph::brute_force_3color(g);
  protocol::ProtocolConfig cfg;
  std::uint64_t exec = 0;
  for (auto _ : state) {
    protocol::HonestProver prover(g, c);
    protocol::Verifier verifier;
    benchmark::DoNotOptimize(protocol::run_protocol(g, prover, verifier, cfg, exec++));
  }
}
BENCHMARK_CAPTURE(BM_HonestRun, k3, "k3");
BENCHMARK_CAPTURE(BM_HonestRun, petersen, "petersen");

void BM_CheatingRunK4(benchmark::State& state) {
  const auto g = dimacs::load(std::string(ZKQBC_GRAPH_DIR) + "/k4.col");
  protocol::ProtocolConfig cfg;
  std::uint64_t exec = 0;
  for (auto _ : state) {
    protocol::CheatingProver prover(g);
    protocol::Verifier verifier;
    benchmark::DoNotOptimize(protocol::run_protocol(g, prover, verifier, cfg, exec++));
  }
}
BENCHMARK(BM_CheatingRunK4);

}  // namespace
