#pragma once

#include <span>
#include <vector>

#include "lotto/profile.hpp"

namespace lotto {

inline constexpr int kDefaultMaxIters = 20000;
inline constexpr double kDefaultTargetEps = 1e-3;
inline constexpr int kDefaultGridK = 300;

/// Optimal budget-feasible mixture over a utility curve. Supported on at
/// most two grid points: pure when the unconstrained peak is affordable,
/// otherwise the mixture of the two upper-hull vertices straddling the
/// budget, hitting it with equality.
struct BestResponseResult {
  int support_size = 0;
  int support[2] = {0, 0};
  double weights[2] = {0.0, 0.0};
  double value = 0.0;
  double envelope_value_at_budget = 0.0;

  double expected_bid(const BidGrid& grid) const {
    double e = 0.0;
    for (int i = 0; i < support_size; ++i) e += weights[i] * grid.point(support[i]);
    return e;
  }
};

/// Exact maximizer of sum_l p_l * u[l] over distributions p on the grid with
/// sum_l p_l * x_l <= budget. Solved geometrically: the optimum value is the
/// upper concave envelope of {(x_l, u[l])} at min(budget, x_max), and an
/// optimum on at most two points always exists. Collinear envelope ties are
/// broken toward lower bids. Throws std::domain_error for budget < 0.
BestResponseResult best_response(std::span<const double> u, double budget, const BidGrid& grid);

/// Outcome of a fictitious-play run.
struct SolveReport {
  EquilibriumProfile profile;
  int iterations = 0;
  bool converged = false;
  /// max over players of best-response value minus achieved utility,
  /// measured exactly on the grid for the returned profile.
  double exploitability = 0.0;
  std::vector<double> expected_bids;
  std::vector<double> budget_slack;
  /// Exploitability recorded every 100 iterations (iteration 0 first).
  std::vector<double> checkpoints;
};

/// Fictitious play with uniform averaging: everyone starts at a point mass
/// on 0; each round, every player best-responds to the frozen averages of
/// the opponents, and the averages absorb the responses with weight
/// 1/(t+1). Fully deterministic. Stops when exploitability reaches
/// target_eps or after max_iters update rounds; non-convergence is reported
/// through the flag, never an exception.
///
/// The grid cap must equal the threshold when one is present, and must be
/// at least 2^(2n+1) * max budget otherwise.
SolveReport fictitious_play(const GameSpec& game, const BidGrid& grid,
                            int max_iters = kDefaultMaxIters,
                            double target_eps = kDefaultTargetEps);

/// Exact grid exploitability of a profile whose supports lie on grid
/// points: max over players of best-response value minus current utility,
/// never negative.
double exploitability(const EquilibriumProfile& profile, const BidGrid& grid);

}  // namespace lotto
