#include "lotto/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "lotto/rng.hpp"

namespace lotto {

SimulationResult simulate(const EquilibriumProfile& profile, long long samples,
                          std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("simulate: samples must be positive");
  int n = profile.num_players();
  Rng rng(seed);

  std::vector<long long> wins(static_cast<std::size_t>(n), 0);
  std::vector<double> bid_sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> bid_sq_sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> bids(static_cast<std::size_t>(n), 0.0);
  std::vector<int> tied;
  tied.reserve(static_cast<std::size_t>(n));

  for (long long t = 0; t < samples; ++t) {
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      double b = strategy_sample(profile.strategies[static_cast<std::size_t>(i)], rng);
      bids[static_cast<std::size_t>(i)] = b;
      bid_sum[static_cast<std::size_t>(i)] += b;
      bid_sq_sum[static_cast<std::size_t>(i)] += b * b;
      if (b > best) best = b;
    }
    tied.clear();
    for (int i = 0; i < n; ++i) {
      if (bids[static_cast<std::size_t>(i)] == best) tied.push_back(i);
    }
    int winner = tied.size() == 1
                     ? tied[0]
                     : tied[static_cast<std::size_t>(rng.uniform_index(
                           static_cast<int>(tied.size())))];
    ++wins[static_cast<std::size_t>(winner)];
  }

  SimulationResult out;
  out.samples = samples;
  out.seed = seed;
  double m = static_cast<double>(samples);
  for (int i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    double share = static_cast<double>(wins[idx]) / m;
    double mean = bid_sum[idx] / m;
    double var = std::max(0.0, bid_sq_sum[idx] / m - mean * mean);
    out.win_share.push_back(share);
    out.mean_bid.push_back(mean);
    out.win_share_se.push_back(std::sqrt(share * (1.0 - share) / m));
    out.mean_bid_se.push_back(std::sqrt(var / m));
  }
  return out;
}

}  // namespace lotto
