#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "stats.hpp"
#include "zkqbc/optics.hpp"

namespace zkqbc::optics {
namespace {

using std::numbers::pi;

// Closed forms evaluated independently (double precision, python/mpmath).
constexpr double kState1H = 3.169682834412772;
constexpr double kState1V = 3.154855104316047;
constexpr double kMuDistance1 = 0.6366100187501752;  // (20/3) sin^2(pi/10)
constexpr double kClickDistance1 = 0.4709170312845783;

TEST(ApparatusParams, DefaultsMatchOperatingPoint) {
  ApparatusParams p;
  EXPECT_DOUBLE_EQ(p.phi, pi / 6.7);
  EXPECT_DOUBLE_EQ(p.theta, pi / 10.0);
  EXPECT_DOUBLE_EQ(p.mean_photon, 20.0);
  EXPECT_DOUBLE_EQ(p.efficiency, 1.0);
  EXPECT_DOUBLE_EQ(p.dark_rate, 0.0);
  for (double w : p.branch_weights) EXPECT_DOUBLE_EQ(w, 1.0 / 3.0);
  EXPECT_NO_THROW(p.validate());
}

TEST(ApparatusParams, ValidateRejectsBadFields) {
  auto bad = [](auto mutate) {
    ApparatusParams p;
    mutate(p);
    return p;
  };
  EXPECT_THROW(bad([](auto& p) { p.mean_photon = -1; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& p) { p.efficiency = 1.5; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& p) { p.dark_rate = -0.1; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& p) { p.branch_weights = {0.5, 0.5, 0.5}; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& p) { p.branch_weights = {1.2, -0.1, -0.1}; }).validate(), std::invalid_argument);
  EXPECT_NO_THROW(bad([](auto& p) { p.branch_weights = {0.5, 0.25, 0.25}; }).validate());
}

TEST(ProtocolState, ZeroAngle) {
  ApparatusParams p;
  p.phi = 0.0;
  const auto s = protocol_state(0, p);
  EXPECT_DOUBLE_EQ(s.h_amp, std::sqrt(20.0));
  EXPECT_DOUBLE_EQ(s.v_amp, 0.0);
}

TEST(ProtocolState, DefaultStateOne) {
  const auto s = protocol_state(1, ApparatusParams{});
  EXPECT_NEAR(s.h_amp, kState1H, 1e-12);
  EXPECT_NEAR(s.v_amp, kState1V, 1e-12);
}

TEST(ProtocolState, EnergyIsMeanPhoton) {
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(protocol_state(k, ApparatusParams{}).mean_photon(), 20.0, 1e-9);
}

TEST(ProtocolState, RejectsBadIndex) {
  EXPECT_THROW(protocol_state(3, ApparatusParams{}), std::invalid_argument);
  EXPECT_THROW(protocol_state(-1, ApparatusParams{}), std::invalid_argument);
}

TEST(BranchIntensities, MatchedBranchIsDark) {
  ApparatusParams p;
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(branch_intensities(protocol_state(j, p), p).mu_v[j], 0.0);
  }
}

TEST(BranchIntensities, NeighbourBranchClosedForm) {
  ApparatusParams p;
  const auto mu = branch_intensities(protocol_state(0, p), p);
  EXPECT_NEAR(mu.mu_v[1], kMuDistance1, 1e-12);

  // Independent route: rotate the field vector numerically by -(phi+theta)
  // and take a third of the vertical intensity.
  const double a = -(p.phi + p.theta);
  const double h = std::sqrt(20.0) * std::cos(p.phi);
  const double v = std::sqrt(20.0) * std::sin(p.phi);
  const double v_rot = std::sin(a) * h + std::cos(a) * v;
  EXPECT_NEAR(mu.mu_v[1], v_rot * v_rot / 3.0, 1e-12);
}

TEST(BranchIntensities, EnergyConservedAtDefaults) {
  ApparatusParams p;
  const PolarizedState s{1.7, -2.9};
  EXPECT_NEAR(branch_intensities(s, p).total(), s.mean_photon(), 1e-9);
}

TEST(ClickProbability, Examples) {
  EXPECT_EQ(click_probability(0.0), 0.0);
  EXPECT_DOUBLE_EQ(click_probability(1e6), 1.0);
  EXPECT_NEAR(click_probability(0.63661), 0.47092, 1e-5);
  EXPECT_NEAR(click_probability(kMuDistance1), kClickDistance1, 1e-14);
  EXPECT_NEAR(click_probability(0.0, 0.1), 1.0 - std::exp(-0.1), 1e-15);
  EXPECT_THROW(click_probability(-0.1), std::invalid_argument);
}

TEST(SampleClicks, VacuumNeverClicks) {
  ApparatusParams p;
  Rng rng = make_stream(1, 0, StreamRole::Channel);
  const BranchIntensities dark{};
  for (int i = 0; i < 10000; ++i) ASSERT_EQ(sample_clicks(dark, p, rng), ClickRecord{});
}

TEST(SampleClicks, MatchedVerticalNeverClicks) {
  ApparatusParams p;
  Rng rng = make_stream(2, 0, StreamRole::Channel);
  for (int j = 0; j < 3; ++j) {
    const auto mu = branch_intensities(protocol_state(j, p), p);
    for (int i = 0; i < 20000; ++i) ASSERT_FALSE(sample_clicks(mu, p, rng).v_click[j]);
  }
}

TEST(SampleClicks, FrequencyMatchesClosedForm) {
  ApparatusParams p;
  BranchIntensities mu;
  mu.mu_v[1] = kMuDistance1;
  Rng rng = make_stream(3, 0, StreamRole::Channel);
  constexpr std::uint64_t kN = 1000000;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < kN; ++i) hits += sample_clicks(mu, p, rng).v_click[1] ? 1 : 0;
  EXPECT_TRUE(testing::WithinSigma(hits, kN, kClickDistance1));
}

// --- invariants -------------------------------------------------------------

TEST(OpticsInvariant, EnergyConservationRandomStates) {
  Rng rng = make_stream(10, 0, StreamRole::Auxiliary);
  for (int i = 0; i < 1000; ++i) {
    ApparatusParams p;
    p.phi = 2 * pi * uniform01(rng);
    p.theta = pi * uniform01(rng);
    p.efficiency = uniform01(rng);
    const double w0 = uniform01(rng), w1 = uniform01(rng) * (1 - w0);
    p.branch_weights = {w0, w1, 1.0 - w0 - w1};
    const PolarizedState s{10 * (uniform01(rng) - 0.5), 10 * (uniform01(rng) - 0.5)};
    ASSERT_NEAR(branch_intensities(s, p).total(), p.efficiency * s.mean_photon(), 1e-9);
  }
}

TEST(OpticsInvariant, PhiInvariance) {
  const ApparatusParams base;
  Rng rng = make_stream(11, 0, StreamRole::Auxiliary);
  for (int t = 0; t < 10; ++t) {
    ApparatusParams shifted = base;
    shifted.phi += 2 * pi * (uniform01(rng) - 0.5);
    for (int j = 0; j < 3; ++j) {
      const auto a = branch_intensities(protocol_state(j, base), base);
      const auto b = branch_intensities(protocol_state(j, shifted), shifted);
      for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(click_probability(a.mu_h[k]), click_probability(b.mu_h[k]), 1e-12);
        EXPECT_NEAR(click_probability(a.mu_v[k]), click_probability(b.mu_v[k]), 1e-12);
      }
    }
  }
}

TEST(OpticsInvariant, MatchedBranchNullForAnyParameters) {
  Rng rng = make_stream(12, 0, StreamRole::Auxiliary);
  for (int i = 0; i < 2000; ++i) {
    ApparatusParams p;
    p.phi = 10 * (uniform01(rng) - 0.5);
    p.theta = 10 * (uniform01(rng) - 0.5);
    p.mean_photon = 1000 * uniform01(rng);
    p.efficiency = uniform01(rng);
    for (int j = 0; j < 3; ++j) ASSERT_EQ(branch_intensities(protocol_state(j, p), p).mu_v[j], 0.0);
  }
}

TEST(OpticsInvariant, DetectorsAreIndependent) {
  ApparatusParams p;
  const auto mu = branch_intensities(protocol_state(0, p), p);
  Rng rng = make_stream(13, 0, StreamRole::Channel);
  constexpr std::uint64_t kN = 1000000;
  std::uint64_t a = 0, b = 0, both = 0;
  for (std::uint64_t i = 0; i < kN; ++i) {
    const auto r = sample_clicks(mu, p, rng);
    a += r.v_click[1];
    b += r.v_click[2];
    both += r.v_click[1] && r.v_click[2];
  }
  const double pa = static_cast<double>(a) / kN;
  const double pb = static_cast<double>(b) / kN;
  EXPECT_TRUE(testing::WithinSigma(both, kN, pa * pb));
}

}  // namespace
}  // namespace zkqbc::optics
