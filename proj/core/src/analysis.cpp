#include "zkqbc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/tools/minima.hpp>

namespace zkqbc::analysis {

namespace {

void require_index(int k, const char* what) {
  if (k < 0 || k >= optics::kStateCount) {
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(k) + " not in {0,1,2}");
  }
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

double escape_for_state(const PolarizedState& state, int k_claimed, const ApparatusParams& params,
                        qbc::VerificationPolicy policy) {
  const auto mu = optics::branch_intensities(state, params);
  double p = std::exp(-(mu.mu_v[k_claimed] + params.dark_rate));
  if (policy == qbc::VerificationPolicy::StrictHorizontal) {
    for (double mu_h : mu.mu_h) p *= optics::click_probability(mu_h, params.dark_rate);
  }
  return p;
}

double wrap_angle(double psi) {
  double r = std::fmod(psi, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  return r;
}

}  // namespace

double identification_probability(int j, const ApparatusParams& params) {
  require_index(j, "state");
  params.validate();
  if (params.dark_rate > 0.0) {
    throw std::invalid_argument("identification probability assumes dark_rate == 0");
  }
  const auto mu = optics::branch_intensities(optics::protocol_state(j, params), params);
  double p = 1.0;
  for (int k = 0; k < optics::kStateCount; ++k) {
    if (k != j) p *= optics::click_probability(mu.mu_v[k]);
  }
  return p;
}

double analytic_pb(const ApparatusParams& params) {
  double sum = 0.0;
  for (int j = 0; j < optics::kStateCount; ++j) sum += identification_probability(j, params);
  return sum / optics::kStateCount;
}

double analytic_escape(int j_sent, int k_claimed, const ApparatusParams& params,
                       qbc::VerificationPolicy policy) {
  require_index(j_sent, "sent state");
  require_index(k_claimed, "claimed state");
  params.validate();
  return escape_for_state(optics::protocol_state(j_sent, params), k_claimed, params, policy);
}

double cheat_objective(double psi, std::array<int, 2> targets, const ApparatusParams& params,
                       CheatObjective objective) {
  const auto state = optics::state_at_angle(psi, params);
  const auto policy = qbc::VerificationPolicy::ImpossibilityOnly;
  const double a = escape_for_state(state, targets[0], params, policy);
  const double b = escape_for_state(state, targets[1], params, policy);
  return objective == CheatObjective::Average ? 0.5 * (a + b) : std::min(a, b);
}

CheatReport optimal_cheat_state(std::array<int, 2> targets, const ApparatusParams& params,
                                const CheatSearchOptions& options) {
  require_index(targets[0], "target");
  require_index(targets[1], "target");
  if (targets[0] == targets[1]) throw std::invalid_argument("optimal_cheat_state: targets must differ");
  if (options.grid_points < 3) throw std::invalid_argument("optimal_cheat_state: grid too coarse");
  params.validate();

  // Intensities are invariant under psi -> psi + pi, so [0, pi) covers every state.
  const std::size_t n = options.grid_points;
  const double step = std::numbers::pi / static_cast<double>(n);
  auto f = [&](double psi) { return cheat_objective(psi, targets, params, options.objective); };

  std::vector<double> grid(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n)));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) grid[i] = f(static_cast<double>(i) * step);
      });
    }
  }

  const auto [min_it, max_it] = std::minmax_element(grid.begin(), grid.end());
  const double best_grid = *max_it;

  // A flat objective (up to rounding) has every psi tied; take the smallest.
  constexpr double kTie = 1e-12;
  double best_psi = 0.0;
  double best_val = grid[0];

  if (best_grid - *min_it > kTie) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      max_step = std::max(max_step, std::abs(grid[(i + 1) % n] - grid[i]));
    }
    const int bits = std::clamp(static_cast<int>(std::ceil(-std::log2(options.tolerance))), 8,
                                std::numeric_limits<double>::digits / 2);
    auto neg = [&](double psi) { return -f(psi); };

    bool have = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double g = grid[i];
      if (g < best_grid - max_step) continue;
      if (g < grid[(i + n - 1) % n] || g < grid[(i + 1) % n]) continue;
      const double centre = static_cast<double>(i) * step;
      std::uintmax_t iters = 200;
      const auto [x, fx] =
          boost::math::tools::brent_find_minima(neg, centre - step, centre + step, bits, iters);
      const double psi = wrap_angle(x);
      const double val = -fx;
      if (!have || val > best_val + kTie || (std::abs(val - best_val) <= kTie && psi < best_psi)) {
        best_psi = psi;
        best_val = val;
        have = true;
      }
    }
  }

  CheatReport report;
  report.targets = targets;
  report.psi = best_psi;
  report.best_state = optics::state_at_angle(best_psi, params);
  for (int k = 0; k < optics::kStateCount; ++k) {
    report.escape_probs[k] =
        escape_for_state(report.best_state, k, params, qbc::VerificationPolicy::ImpossibilityOnly);
  }
  const double a = report.escape_probs[targets[0]];
  const double b = report.escape_probs[targets[1]];
  report.objective = options.objective == CheatObjective::Average ? 0.5 * (a + b) : std::min(a, b);
  return report;
}

double round_cheat_probability(std::uint64_t m, double p_escape, std::uint64_t bad_edges) {
  if (m == 0) throw std::invalid_argument("round_cheat_probability: graph has no edges");
  if (bad_edges > m) throw std::invalid_argument("round_cheat_probability: more bad edges than edges");
  require_probability(p_escape, "p_escape");
  return 1.0 - static_cast<double>(bad_edges) * (1.0 - p_escape) / static_cast<double>(m);
}

double total_cheat_probability(std::uint64_t m, double p_escape, std::uint64_t rounds,
                               std::uint64_t bad_edges) {
  if (rounds == 0) throw std::invalid_argument("total_cheat_probability: rounds must be >= 1");
  return std::pow(round_cheat_probability(m, p_escape, bad_edges), static_cast<double>(rounds));
}

double exponential_soundness_approx(std::uint64_t m, double p_escape) {
  require_probability(p_escape, "p_escape");
  return std::exp(-(1.0 - p_escape) * static_cast<double>(m));
}

double soundness_exponent_gap(std::uint64_t m, double p_escape) {
  if (m == 0) throw std::invalid_argument("soundness_exponent_gap: m must be >= 1");
  require_probability(p_escape, "p_escape");
  const double md = static_cast<double>(m);
  const double loss = 1.0 - p_escape;
  return md * md * std::log1p(-loss / md) + loss * md;
}

double hiding_probability(std::uint64_t n, double pb, std::uint64_t attempts) {
  if (n == 0) throw std::invalid_argument("hiding_probability: n must be >= 1");
  if (attempts == 0) throw std::invalid_argument("hiding_probability: attempts must be >= 1");
  require_probability(pb, "pb");
  const double per_round = std::pow(pb, static_cast<double>(n));
  return -std::expm1(static_cast<double>(attempts) * std::log1p(-per_round));
}

double hiding_probability_exact(const std::array<std::size_t, optics::kStateCount>& class_sizes,
                                const ApparatusParams& params, std::uint64_t attempts) {
  if (attempts == 0) throw std::invalid_argument("hiding_probability_exact: attempts must be >= 1");
  std::array<double, optics::kStateCount> id{};
  for (int j = 0; j < optics::kStateCount; ++j) id[j] = identification_probability(j, params);

  std::array<int, optics::kStateCount> perm{0, 1, 2};
  double per_round = 0.0;
  int count = 0;
  do {
    double p = 1.0;
    for (int c = 0; c < optics::kStateCount; ++c) {
      p *= std::pow(id[perm[c]], static_cast<double>(class_sizes[c]));
    }
    per_round += p;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  per_round /= count;
  return -std::expm1(static_cast<double>(attempts) * std::log1p(-per_round));
}

}  // namespace zkqbc::analysis
