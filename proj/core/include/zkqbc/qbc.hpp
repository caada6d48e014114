#pragma once

#include <optional>

#include "zkqbc/optics.hpp"
#include "zkqbc/random.hpp"

/// Coherent-state commitment to a trit: commit, measure, unveil, verify.
namespace zkqbc::qbc {

using optics::ApparatusParams;
using optics::ClickRecord;
using optics::PolarizedState;

/// The sender's statement at unveil time: "I sent protocol state `state_index`".
/// Out-of-range values are representable because a dishonest sender can say anything.
struct Claim {
  int state_index = 0;

  bool in_range() const { return state_index >= 0 && state_index < optics::kStateCount; }
  bool operator==(const Claim&) const = default;
};

enum class VerificationPolicy {
  /// Reject only on an event of probability zero under the claim.
  ImpossibilityOnly,
  /// Also require every horizontal detector to have clicked.
  StrictHorizontal,
};

enum class UnveilResult { Accept, Reject };

PolarizedState commit(int color_index, const ApparatusParams& params);

ClickRecord measure_commitment(const PolarizedState& state, const ApparatusParams& params, Rng& rng);

/// Throws std::invalid_argument if the claim is out of range.
UnveilResult verify_unveil(Claim claim, const ClickRecord& record,
                           VerificationPolicy policy = VerificationPolicy::ImpossibilityOnly);

/// Certainty-only identification: returns the state index when exactly two
/// vertical detectors clicked (the dark branch is the only surviving state).
std::optional<int> discriminate_unaided(const ClickRecord& record);

}  // namespace zkqbc::qbc
