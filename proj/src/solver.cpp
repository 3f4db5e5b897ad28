#include "lotto/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lotto/utility.hpp"

namespace lotto {

namespace {

/// Indices of the upper convex hull of {(x_l, u[l])}, left to right.
/// Collinear points are kept so budget mixtures can pick the tightest pair.
std::vector<int> upper_hull(std::span<const double> u, const BidGrid& grid) {
  std::vector<int> hull;
  hull.reserve(u.size());
  for (int l = 0; l < static_cast<int>(u.size()); ++l) {
    double xl = grid.point(l);
    double ul = u[static_cast<std::size_t>(l)];
    while (hull.size() >= 2) {
      int a = hull[hull.size() - 2];
      int b = hull[hull.size() - 1];
      double cross = (grid.point(b) - grid.point(a)) * (ul - u[static_cast<std::size_t>(a)]) -
                     (u[static_cast<std::size_t>(b)] - u[static_cast<std::size_t>(a)]) *
                         (xl - grid.point(a));
      if (cross > 0.0) {
        hull.pop_back();  // b lies strictly below the chord a -> l
      } else {
        break;
      }
    }
    hull.push_back(l);
  }
  return hull;
}

double envelope_at(const std::vector<int>& hull, std::span<const double> u, const BidGrid& grid,
                   double z) {
  auto it = std::partition_point(hull.begin(), hull.end(),
                                 [&](int l) { return grid.point(l) <= z; });
  if (it == hull.begin()) return u[static_cast<std::size_t>(hull.front())];
  if (it == hull.end()) return u[static_cast<std::size_t>(hull.back())];
  int a = *(it - 1);
  int b = *it;
  double w = (z - grid.point(a)) / (grid.point(b) - grid.point(a));
  return (1.0 - w) * u[static_cast<std::size_t>(a)] + w * u[static_cast<std::size_t>(b)];
}

struct PlayerState {
  std::vector<double> raw;  // unnormalized sum of past best responses
  double terms = 0.0;       // how many responses the sum absorbed
};

DiscreteStrategy normalized_average(const PlayerState& state, const BidGrid& grid) {
  std::vector<double> probs(state.raw.size());
  double total = 0.0;
  for (double p : state.raw) total += p;
  for (std::size_t l = 0; l < probs.size(); ++l) probs[l] = state.raw[l] / total;
  return DiscreteStrategy(grid, std::move(probs));
}

}  // namespace

BestResponseResult best_response(std::span<const double> u, double budget, const BidGrid& grid) {
  if (u.size() != static_cast<std::size_t>(grid.size())) {
    throw std::invalid_argument("best_response: curve length must match the grid");
  }
  if (!(budget >= 0.0)) {
    throw std::domain_error("best_response: budget must be nonnegative");
  }
  for (double v : u) {
    if (!std::isfinite(v) || v < -tol::kGeometry || v > 1.0 + tol::kGeometry) {
      throw std::invalid_argument("best_response: curve entries must lie in [0, 1]");
    }
  }

  int peak = 0;
  for (int l = 1; l < static_cast<int>(u.size()); ++l) {
    if (u[static_cast<std::size_t>(l)] > u[static_cast<std::size_t>(peak)]) peak = l;
  }

  std::vector<int> hull = upper_hull(u, grid);
  BestResponseResult out;
  out.envelope_value_at_budget = envelope_at(hull, u, grid, std::min(budget, grid.cap()));

  if (grid.point(peak) <= budget) {
    out.support_size = 1;
    out.support[0] = peak;
    out.weights[0] = 1.0;
    out.value = u[static_cast<std::size_t>(peak)];
    return out;
  }

  // The peak is unaffordable, so the optimum sits on the hull edge that
  // straddles the budget line.
  auto it = std::partition_point(hull.begin(), hull.end(),
                                 [&](int l) { return grid.point(l) <= budget; });
  int a = *(it - 1);
  int b = *it;
  if (grid.point(a) == budget) {
    out.support_size = 1;
    out.support[0] = a;
    out.weights[0] = 1.0;
    out.value = u[static_cast<std::size_t>(a)];
    return out;
  }
  double w_hi = (budget - grid.point(a)) / (grid.point(b) - grid.point(a));
  out.support_size = 2;
  out.support[0] = a;
  out.support[1] = b;
  out.weights[0] = 1.0 - w_hi;
  out.weights[1] = w_hi;
  out.value = out.weights[0] * u[static_cast<std::size_t>(a)] +
              out.weights[1] * u[static_cast<std::size_t>(b)];
  return out;
}

SolveReport fictitious_play(const GameSpec& game, const BidGrid& grid, int max_iters,
                            double target_eps) {
  if (max_iters < 0) {
    throw std::invalid_argument("fictitious_play: max_iters must be nonnegative");
  }
  if (game.threshold) {
    if (grid.cap() != *game.threshold) {
      throw std::invalid_argument("fictitious_play: grid cap must equal the threshold");
    }
  } else if (grid.cap() + tol::kGeometry < game.default_bid_cap()) {
    throw std::invalid_argument(
        "fictitious_play: threshold-free games need a grid cap of at least "
        "2^(2n+1) * max budget");
  }

  int n = game.num_players();
  std::vector<PlayerState> state(static_cast<std::size_t>(n));
  for (auto& s : state) {
    s.raw.assign(static_cast<std::size_t>(grid.size()), 0.0);
    s.raw[0] = 1.0;
    s.terms = 1.0;
  }

  std::vector<double> checkpoints;
  std::vector<Strategy> averages;
  std::vector<BestResponseResult> responses(static_cast<std::size_t>(n));

  for (int t = 0;; ++t) {
    averages.clear();
    for (const auto& s : state) averages.emplace_back(normalized_average(s, grid));

    double expl = 0.0;
    for (int i = 0; i < n; ++i) {
      std::vector<double> curve = utility_curve(grid, averages, i);
      responses[static_cast<std::size_t>(i)] =
          best_response(curve, game.budgets[static_cast<std::size_t>(i)], grid);
      const auto& avg = std::get<DiscreteStrategy>(averages[static_cast<std::size_t>(i)]);
      double current = 0.0;
      for (std::size_t l = 0; l < curve.size(); ++l) {
        if (avg.probs()[l] > 0.0) current += avg.probs()[l] * curve[l];
      }
      expl = std::max(expl, responses[static_cast<std::size_t>(i)].value - current);
    }
    expl = std::max(expl, 0.0);
    if (!std::isfinite(expl)) {
      throw std::logic_error("fictitious_play: non-finite exploitability");
    }
    if (t % 100 == 0) checkpoints.push_back(expl);

    bool stop = expl <= target_eps || t >= max_iters;
    if (stop) {
      double top = 0.0;
      for (const Strategy& s : averages) top = std::max(top, strategy_support_max(s));
      SolveReport report{
          EquilibriumProfile(game, std::move(averages), Regime::kGridSolved, top),
          t,
          expl <= target_eps,
          expl,
          {},
          {},
          std::move(checkpoints)};
      for (int i = 0; i < n; ++i) {
        double mean = strategy_mean(report.profile.strategies[static_cast<std::size_t>(i)]);
        report.expected_bids.push_back(mean);
        report.budget_slack.push_back(game.budgets[static_cast<std::size_t>(i)] - mean);
      }
      return report;
    }

    for (int i = 0; i < n; ++i) {
      const BestResponseResult& br = responses[static_cast<std::size_t>(i)];
      auto& s = state[static_cast<std::size_t>(i)];
      for (int j = 0; j < br.support_size; ++j) {
        s.raw[static_cast<std::size_t>(br.support[j])] += br.weights[j];
      }
      s.terms += 1.0;
    }
  }
}

double exploitability(const EquilibriumProfile& profile, const BidGrid& grid) {
  int n = profile.num_players();
  std::vector<Strategy> on_grid;
  on_grid.reserve(static_cast<std::size_t>(n));
  for (const Strategy& s : profile.strategies) on_grid.emplace_back(discretize(s, grid));
  double expl = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> curve = utility_curve(grid, on_grid, i);
    BestResponseResult br =
        best_response(curve, profile.game.budgets[static_cast<std::size_t>(i)], grid);
    const auto& mine = std::get<DiscreteStrategy>(on_grid[static_cast<std::size_t>(i)]);
    double current = 0.0;
    for (std::size_t l = 0; l < curve.size(); ++l) {
      if (mine.probs()[l] > 0.0) current += mine.probs()[l] * curve[l];
    }
    expl = std::max(expl, br.value - current);
  }
  return std::max(expl, 0.0);
}

}  // namespace lotto
