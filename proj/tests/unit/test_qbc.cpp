#include <gtest/gtest.h>

#include <cmath>

#include "stats.hpp"
#include "zkqbc/qbc.hpp"

namespace zkqbc::qbc {
namespace {

constexpr double kMu1 = 0.6366100187501752;  // (20/3) sin^2(pi/10)
constexpr double kMu2 = 2.303276685416842;   // (20/3) sin^2(pi/5)

ClickRecord record(std::array<bool, 3> h, std::array<bool, 3> v) { return ClickRecord{h, v}; }

TEST(Commit, IsProtocolState) {
  ApparatusParams p;
  EXPECT_EQ(commit(0, p), optics::protocol_state(0, p));
  EXPECT_NEAR(commit(1, p).mean_photon(), 20.0, 1e-9);
  const auto s2 = commit(2, p);
  EXPECT_NEAR(std::atan2(s2.v_amp, s2.h_amp), p.phi + 2 * p.theta, 1e-12);
  EXPECT_THROW(commit(3, p), std::invalid_argument);
}

TEST(MeasureCommitment, MatchedVerticalAlwaysDark) {
  ApparatusParams p;
  Rng rng = make_stream(1, 0, StreamRole::Channel);
  for (int j = 0; j < 3; ++j) {
    const auto s = commit(j, p);
    for (int i = 0; i < 20000; ++i) ASSERT_FALSE(measure_commitment(s, p, rng).v_click[j]);
  }
}

TEST(MeasureCommitment, DistanceTwoVerticalFrequency) {
  ApparatusParams p;
  Rng rng = make_stream(2, 0, StreamRole::Channel);
  const auto s = commit(0, p);
  constexpr std::uint64_t kN = 1000000;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < kN; ++i) hits += measure_commitment(s, p, rng).v_click[2];
  EXPECT_TRUE(testing::WithinSigma(hits, kN, -std::expm1(-kMu2)));
}

TEST(MeasureCommitment, ZeroAmplitudeIsSilent) {
  ApparatusParams p;
  Rng rng = make_stream(3, 0, StreamRole::Channel);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(measure_commitment(PolarizedState{}, p, rng), ClickRecord{});
}

TEST(VerifyUnveil, ExampleRecord) {
  const auto r = record({true, true, true}, {false, true, true});
  EXPECT_EQ(verify_unveil(Claim{2}, r), UnveilResult::Reject);
  EXPECT_EQ(verify_unveil(Claim{1}, r), UnveilResult::Reject);
  EXPECT_EQ(verify_unveil(Claim{0}, r), UnveilResult::Accept);
}

TEST(VerifyUnveil, SilentRecordAcceptsAnyClaim) {
  for (int k = 0; k < 3; ++k) EXPECT_EQ(verify_unveil(Claim{k}, ClickRecord{}), UnveilResult::Accept);
}

TEST(VerifyUnveil, StrictHorizontalNeedsAllHorizontalClicks) {
  const auto full = record({true, true, true}, {false, true, true});
  const auto missing = record({true, false, true}, {false, true, true});
  EXPECT_EQ(verify_unveil(Claim{0}, full, VerificationPolicy::StrictHorizontal), UnveilResult::Accept);
  EXPECT_EQ(verify_unveil(Claim{0}, missing, VerificationPolicy::StrictHorizontal), UnveilResult::Reject);
  EXPECT_EQ(verify_unveil(Claim{0}, missing, VerificationPolicy::ImpossibilityOnly), UnveilResult::Accept);
}

TEST(VerifyUnveil, RejectsOutOfRangeClaim) {
  EXPECT_THROW(verify_unveil(Claim{3}, ClickRecord{}), std::invalid_argument);
  EXPECT_THROW(verify_unveil(Claim{-1}, ClickRecord{}), std::invalid_argument);
}

TEST(DiscriminateUnaided, Examples) {
  EXPECT_EQ(discriminate_unaided(record({}, {false, true, true})), 0);
  EXPECT_EQ(discriminate_unaided(record({}, {true, false, true})), 1);
  EXPECT_EQ(discriminate_unaided(record({}, {true, true, false})), 2);
  EXPECT_EQ(discriminate_unaided(record({}, {false, false, false})), std::nullopt);
  EXPECT_EQ(discriminate_unaided(record({}, {true, true, true})), std::nullopt);
  EXPECT_EQ(discriminate_unaided(record({}, {false, true, false})), std::nullopt);
}

// --- invariants -------------------------------------------------------------

TEST(QbcInvariant, DiscriminationNeverWrongWithoutDarkCounts) {
  ApparatusParams p;
  Rng rng = make_stream(20, 0, StreamRole::Channel);
  Rng pick = make_stream(20, 0, StreamRole::Prover);
  std::uint64_t identified = 0;
  constexpr std::uint64_t kN = 1000000;
  for (std::uint64_t i = 0; i < kN; ++i) {
    const int j = static_cast<int>(uniform_index(pick, 3));
    const auto guess = discriminate_unaided(measure_commitment(commit(j, p), p, rng));
    if (guess) {
      ASSERT_EQ(*guess, j);
      ++identified;
    }
  }
  EXPECT_GT(identified, 0u);
}

TEST(QbcInvariant, HonestUnveilAlwaysAccepted) {
  ApparatusParams p;
  Rng rng = make_stream(21, 0, StreamRole::Channel);
  constexpr int kN = 1000000;
  for (int i = 0; i < kN; ++i) {
    const int j = i % 3;
    ASSERT_EQ(verify_unveil(Claim{j}, measure_commitment(commit(j, p), p, rng)), UnveilResult::Accept);
  }
}

TEST(QbcInvariant, DirectLieEscapeFrequency) {
  ApparatusParams p;
  constexpr std::uint64_t kN = 1000000;
  struct Case {
    int sent, claimed;
    double escape;
  };
  for (const Case c : {Case{0, 1, std::exp(-kMu1)}, Case{0, 2, std::exp(-kMu2)}, Case{1, 2, std::exp(-kMu1)}}) {
    Rng rng = make_stream(22, static_cast<std::uint64_t>(c.sent * 3 + c.claimed), StreamRole::Channel);
    const auto s = commit(c.sent, p);
    std::uint64_t escaped = 0;
    for (std::uint64_t i = 0; i < kN; ++i) {
      escaped += verify_unveil(Claim{c.claimed}, measure_commitment(s, p, rng)) == UnveilResult::Accept;
    }
    EXPECT_TRUE(testing::WithinSigma(escaped, kN, c.escape)) << c.sent << "->" << c.claimed;
  }
}

}  // namespace
}  // namespace zkqbc::qbc
