#include "zkqbc/batch.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zkqbc::protocol {

BatchTally& BatchTally::operator+=(const BatchTally& other) {
  executions += other.executions;
  accepted += other.accepted;
  rejected_rounds += other.rejected_rounds;
  fully_identified += other.fully_identified;
  return *this;
}

BatchTally run_batch(const Graph& g, const ProverFactory& make_prover, const ProtocolConfig& cfg,
                     std::uint64_t trials, unsigned threads) {
  ProtocolConfig quiet = cfg;
  quiet.keep_transcripts = false;
  quiet.resolved_rounds(g);

  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(trials, 1));
  std::vector<BatchTally> partial(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::uint64_t lo = w * chunk;
          const std::uint64_t hi = std::min(trials, lo + chunk);
          for (std::uint64_t i = lo; i < hi; ++i) {
            auto prover = make_prover();
            CuriousVerifier verifier;
            const auto res = run_protocol(g, *prover, verifier, quiet, i);
            auto& t = partial[w];
            ++t.executions;
            t.accepted += res.accepted ? 1 : 0;
            t.rejected_rounds += res.rejected_rounds;
            t.fully_identified += verifier.succeeded() ? 1 : 0;
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  BatchTally total;
  for (const auto& t : partial) total += t;
  return total;
}

}  // namespace zkqbc::protocol
