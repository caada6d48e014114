#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace zkqbc {

/// Random engine used throughout the simulator. mt19937_64's output sequence
/// is fixed by the standard, so every draw below is reproducible across
/// platforms as long as we avoid the implementation-defined std distributions.
using Rng = std::mt19937_64;

/// Independent roles inside one protocol execution.
enum class StreamRole : std::uint32_t {
  Prover = 1,
  Verifier = 2,
  Channel = 3,
  Auxiliary = 4,
};

/// Derives the stream for (seed, execution, role). Streams for different
/// executions are unrelated, so batch statistics do not depend on scheduling.
Rng make_stream(std::uint64_t seed, std::uint64_t execution, StreamRole role);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

/// True with probability p (p outside [0, 1] is clamped).
bool bernoulli(Rng& rng, double p);

/// Uniform integer in [0, n). n must be positive.
std::size_t uniform_index(Rng& rng, std::size_t n);

}  // namespace zkqbc
