#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "zkqbc/random.hpp"

/// Two-mode coherent states and the three-branch threshold-detector apparatus
/// that measures them.
///
/// The apparatus splits the incoming light into three branches. Branch k
/// rotates polarization by -(phi + k*theta) and separates horizontal and
/// vertical light on a PBS, each output watched by a click/no-click detector.
/// A protocol state sent at angle phi + j*theta therefore leaves the vertical
/// detector of branch j dark.
namespace zkqbc::optics {

inline constexpr int kStateCount = 3;

struct ApparatusParams {
  double phi = std::numbers::pi / 6.7;
  double theta = std::numbers::pi / 10.0;
  double mean_photon = 20.0;  ///< alpha^2
  std::array<double, kStateCount> branch_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  double efficiency = 1.0;
  double dark_rate = 0.0;  ///< mean dark counts per detector per shot

  /// Throws std::invalid_argument when any field is out of its domain.
  void validate() const;

  double amplitude() const { return std::sqrt(mean_photon); }
  /// Analyzer angle of branch k, which is also the angle of protocol state k.
  double branch_angle(int k) const { return phi + k * theta; }
};

/// Real field amplitudes of the horizontal and vertical modes.
struct PolarizedState {
  double h_amp = 0.0;
  double v_amp = 0.0;

  double mean_photon() const { return h_amp * h_amp + v_amp * v_amp; }
  bool operator==(const PolarizedState&) const = default;
};

/// Mean photon number reaching each of the six detectors.
struct BranchIntensities {
  std::array<double, kStateCount> mu_h{};
  std::array<double, kStateCount> mu_v{};

  double total() const;
};

struct ClickRecord {
  std::array<bool, kStateCount> h_click{};
  std::array<bool, kStateCount> v_click{};

  bool operator==(const ClickRecord&) const = default;
};

/// Protocol state k in {0,1,2}: (alpha cos(phi+k theta), alpha sin(phi+k theta)).
PolarizedState protocol_state(int k, const ApparatusParams& params);

/// Honest-energy state at an arbitrary polarization angle psi.
PolarizedState state_at_angle(double psi, const ApparatusParams& params);

BranchIntensities branch_intensities(const PolarizedState& state, const ApparatusParams& params);

/// Threshold detector: 1 - exp(-(mu + dark_rate)).
double click_probability(double mu, double dark_rate = 0.0);

/// Each detector clicks independently; exact for coherent light on linear optics.
ClickRecord sample_clicks(const BranchIntensities& intensities, const ApparatusParams& params,
                          Rng& rng);

}  // namespace zkqbc::optics
