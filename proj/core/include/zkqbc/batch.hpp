#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "zkqbc/protocol.hpp"

namespace zkqbc::protocol {

/// Aggregate counts over many independent executions. Every execution uses a
/// CuriousVerifier, which behaves exactly like the honest one on the wire.
struct BatchTally {
  std::uint64_t executions = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected_rounds = 0;
  std::uint64_t fully_identified = 0;  ///< executions where the verifier learned every color in some round

  BatchTally& operator+=(const BatchTally& other);
  bool operator==(const BatchTally&) const = default;
};

using ProverFactory = std::function<std::unique_ptr<Prover>()>;

/// Runs executions 0..trials-1 of run_protocol, split over `threads` workers.
/// Execution i always draws from the streams of (cfg.seed, i), so the tally
/// is the same for any thread count. Transcripts are not kept.
BatchTally run_batch(const Graph& g, const ProverFactory& make_prover, const ProtocolConfig& cfg,
                     std::uint64_t trials, unsigned threads = 1);

}  // namespace zkqbc::protocol
