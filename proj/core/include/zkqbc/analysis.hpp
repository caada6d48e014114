#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "zkqbc/optics.hpp"
#include "zkqbc/qbc.hpp"

/// Closed-form probabilities for the commitment and the graph protocol, and
/// the search for the sender's best single-state cheat.
namespace zkqbc::analysis {

using optics::ApparatusParams;
using optics::PolarizedState;

/// Default lie-escape probability used by the published soundness formulas.
inline constexpr double kNominalEscape = 0.4;

/// Probability that an unaided receiver identifies protocol state j with
/// certainty: both non-matching vertical detectors click. Requires dark_rate == 0.
double identification_probability(int j, const ApparatusParams& params);

/// Mean of identification_probability over a uniformly chosen state.
/// Throws std::invalid_argument when dark_rate > 0.
double analytic_pb(const ApparatusParams& params);

/// Probability that committing j and claiming k passes verify_unveil.
/// Equals exp(-mu_v[k | j]) under ImpossibilityOnly with no dark counts.
double analytic_escape(int j_sent, int k_claimed, const ApparatusParams& params,
                       qbc::VerificationPolicy policy = qbc::VerificationPolicy::ImpossibilityOnly);

enum class CheatObjective {
  Average,  ///< mean escape over the two target claims
  MaxMin,   ///< worst-case escape over the two target claims
};

struct CheatSearchOptions {
  CheatObjective objective = CheatObjective::Average;
  std::size_t grid_points = 20000;  ///< over psi in [0, pi)
  double tolerance = 1e-7;          ///< final bracket width in psi
  unsigned threads = 1;
};

struct CheatReport {
  std::array<int, 2> targets{};
  double psi = 0.0;
  PolarizedState best_state;
  std::array<double, optics::kStateCount> escape_probs{};  ///< per claimed index
  double objective = 0.0;
};

/// Value of the cheat objective for the honest-energy state at angle psi.
double cheat_objective(double psi, std::array<int, 2> targets, const ApparatusParams& params,
                       CheatObjective objective = CheatObjective::Average);

/// Best state on the circle h^2 + v^2 = mean_photon for a sender who wants to
/// be able to unveil either target. Dense grid, then Brent refinement around
/// every grid peak within reach of the best; ties go to the smallest psi.
/// Throws std::invalid_argument when the targets are equal or out of range.
CheatReport optimal_cheat_state(std::array<int, 2> targets, const ApparatusParams& params,
                                const CheatSearchOptions& options = {});

/// Per-round acceptance of a prover with `bad_edges` monochromatic edges out
/// of m: 1 - bad_edges * (1 - p_escape) / m.
double round_cheat_probability(std::uint64_t m, double p_escape, std::uint64_t bad_edges = 1);

/// round_cheat_probability raised to `rounds`.
double total_cheat_probability(std::uint64_t m, double p_escape, std::uint64_t rounds,
                               std::uint64_t bad_edges = 1);

/// Large-m approximation exp(-(1 - p_escape) m) of total_cheat_probability
/// with m^2 rounds.
double exponential_soundness_approx(std::uint64_t m, double p_escape);

/// m^2 ln(1 - (1 - p_escape)/m) + (1 - p_escape) m: log-ratio of the exact
/// m^2-round soundness to its exponential approximation.
double soundness_exponent_gap(std::uint64_t m, double p_escape);

/// 1 - (1 - pb^n)^attempts: chance an unaided verifier identifies all n
/// vertices in at least one of `attempts` independent rounds.
double hiding_probability(std::uint64_t n, double pb, std::uint64_t attempts);

/// Same event for an honest prover whose coloring has the given color-class
/// sizes, averaging the per-round product of identification probabilities
/// over the six color permutations.
double hiding_probability_exact(const std::array<std::size_t, optics::kStateCount>& class_sizes,
                                const ApparatusParams& params, std::uint64_t attempts);

}  // namespace zkqbc::analysis
