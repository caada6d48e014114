#include "zkqbc/qbc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zkqbc::qbc {

PolarizedState commit(int color_index, const ApparatusParams& params) {
  return optics::protocol_state(color_index, params);
}

ClickRecord measure_commitment(const PolarizedState& state, const ApparatusParams& params, Rng& rng) {
  return optics::sample_clicks(optics::branch_intensities(state, params), params, rng);
}

UnveilResult verify_unveil(Claim claim, const ClickRecord& record, VerificationPolicy policy) {
  if (!claim.in_range()) {
    throw std::invalid_argument("verify_unveil: claim " + std::to_string(claim.state_index) +
                                " not in {0,1,2}");
  }
  if (record.v_click[claim.state_index]) return UnveilResult::Reject;
  if (policy == VerificationPolicy::StrictHorizontal &&
      !std::all_of(record.h_click.begin(), record.h_click.end(), [](bool b) { return b; })) {
    return UnveilResult::Reject;
  }
  return UnveilResult::Accept;
}

std::optional<int> discriminate_unaided(const ClickRecord& record) {
  const auto& v = record.v_click;
  if (std::count(v.begin(), v.end(), true) != 2) return std::nullopt;
  return static_cast<int>(std::find(v.begin(), v.end(), false) - v.begin());
}

}  // namespace zkqbc::qbc
