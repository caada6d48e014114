#include "zkqbc/optics.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zkqbc::optics {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("ApparatusParams: ") + what);
}

void require_state_index(int k) {
  if (k < 0 || k >= kStateCount) {
    throw std::invalid_argument("state index " + std::to_string(k) + " not in {0,1,2}");
  }
}

}  // namespace

void ApparatusParams::validate() const {
  require(std::isfinite(phi), "phi must be finite");
  require(std::isfinite(theta), "theta must be finite");
  require(std::isfinite(mean_photon) && mean_photon >= 0.0, "mean_photon must be >= 0");
  double sum = 0.0;
  for (double w : branch_weights) {
    require(std::isfinite(w) && w >= 0.0, "branch weights must be >= 0");
    sum += w;
  }
  require(std::abs(sum - 1.0) <= 1e-12, "branch weights must sum to 1");
  require(efficiency >= 0.0 && efficiency <= 1.0, "efficiency must lie in [0, 1]");
  require(std::isfinite(dark_rate) && dark_rate >= 0.0, "dark_rate must be >= 0");
}

double BranchIntensities::total() const {
  return std::accumulate(mu_h.begin(), mu_h.end(), 0.0) +
         std::accumulate(mu_v.begin(), mu_v.end(), 0.0);
}

PolarizedState protocol_state(int k, const ApparatusParams& params) {
  require_state_index(k);
  return state_at_angle(params.branch_angle(k), params);
}

PolarizedState state_at_angle(double psi, const ApparatusParams& params) {
  const double alpha = params.amplitude();
  return {alpha * std::cos(psi), alpha * std::sin(psi)};
}

BranchIntensities branch_intensities(const PolarizedState& state, const ApparatusParams& params) {
  constexpr double kNoise = 4.0 * std::numeric_limits<double>::epsilon();
  const double scale = std::abs(state.h_amp) + std::abs(state.v_amp);

  BranchIntensities out;
  for (int k = 0; k < kStateCount; ++k) {
    const double a = params.branch_angle(k);
    const double c = std::cos(a);
    const double s = std::sin(a);
    double along = state.h_amp * c + state.v_amp * s;
    double across = -state.h_amp * s + state.v_amp * c;
    // Residuals at rounding level are cancellation noise, not light.
    if (std::abs(along) <= kNoise * scale) along = 0.0;
    if (std::abs(across) <= kNoise * scale) across = 0.0;
    const double gain = params.efficiency * params.branch_weights[k];
    out.mu_h[k] = gain * along * along;
    out.mu_v[k] = gain * across * across;
  }
  return out;
}

double click_probability(double mu, double dark_rate) {
  if (!(mu >= 0.0)) throw std::invalid_argument("click_probability: mean photon number must be >= 0");
  if (!(dark_rate >= 0.0)) throw std::invalid_argument("click_probability: dark rate must be >= 0");
  return -std::expm1(-(mu + dark_rate));
}

ClickRecord sample_clicks(const BranchIntensities& intensities, const ApparatusParams& params,
                          Rng& rng) {
  ClickRecord rec;
  for (int k = 0; k < kStateCount; ++k) {
    rec.h_click[k] = bernoulli(rng, click_probability(intensities.mu_h[k], params.dark_rate));
    rec.v_click[k] = bernoulli(rng, click_probability(intensities.mu_v[k], params.dark_rate));
  }
  return rec;
}

}  // namespace zkqbc::optics
