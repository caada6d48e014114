#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <gtest/gtest.h>

namespace zkqbc::testing {

/// Binomial standard deviation of a frequency estimated from n trials.
inline double binomial_sigma(double p, std::uint64_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

/// gtest predicate: k successes out of n lie within `sigmas` standard
/// deviations of the expected probability p.
inline ::testing::AssertionResult WithinSigma(std::uint64_t k, std::uint64_t n, double p, double sigmas = 3.0) {
  const double freq = static_cast<double>(k) / static_cast<double>(n);
  const double sigma = binomial_sigma(p, n);
  const double z = sigma > 0.0 ? (freq - p) / sigma : (freq == p ? 0.0 : INFINITY);
  if (std::abs(z) <= sigmas) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "frequency " << freq << " (" << k << "/" << n << ") vs expected " << p
                                       << ": z = " << z;
}

}  // namespace zkqbc::testing
