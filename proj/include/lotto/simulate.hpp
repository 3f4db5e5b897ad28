#pragma once

#include <cstdint>
#include <vector>

#include "lotto/profile.hpp"

namespace lotto {

/// Per-player outcome frequencies from repeated play of a strategy profile.
struct SimulationResult {
  std::vector<double> win_share;
  std::vector<double> mean_bid;
  std::vector<double> win_share_se;  // binomial standard error
  std::vector<double> mean_bid_se;   // sample standard error of the mean bid
  long long samples = 0;
  std::uint64_t seed = 0;
};

/// Plays the game `samples` times: every player draws a bid by inverse-cdf
/// sampling, the highest bid wins, and exact ties are broken uniformly among
/// the tied players. Fully reproducible: the same seed always yields the
/// same result, bit for bit.
SimulationResult simulate(const EquilibriumProfile& profile, long long samples,
                          std::uint64_t seed);

}  // namespace lotto
