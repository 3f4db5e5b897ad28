#pragma once

#include <optional>
#include <vector>

namespace lotto {

/// Numeric tolerances shared across the library.
namespace tol {
inline constexpr double kMass = 1e-12;        // total probability mass
inline constexpr double kBudget = 1e-9;       // budget feasibility slack
inline constexpr double kGeometry = 1e-9;     // support endpoint comparisons
}  // namespace tol

/// A multiplayer all-pay auction for a single prize of value 1.
///
/// Each player i mixes over nonnegative bids subject to a soft budget
/// constraint E[bid] <= budgets[i]; the highest bid wins, ties split
/// uniformly. An optional threshold caps the admissible bids at
/// [0, threshold].
struct GameSpec {
  std::vector<double> budgets;
  std::optional<double> threshold;

  GameSpec(std::vector<double> budgets, std::optional<double> threshold);

  int num_players() const { return static_cast<int>(budgets.size()); }
  double max_budget() const;

  /// Player indices sorted by descending budget (stable, so equal budgets
  /// keep their original relative order).
  const std::vector<int>& budget_order() const { return budget_order_; }

  /// Cap 2^(2n+1) * max budget: no equilibrium bid of the threshold-free
  /// game exceeds it, so grids over [0, cap] lose nothing.
  double default_bid_cap() const;

 private:
  std::vector<int> budget_order_;
};

/// Uniform grid of k+1 bid levels {0, cap/k, 2*cap/k, ..., cap}.
class BidGrid {
 public:
  BidGrid(int k, double cap);

  int resolution() const { return k_; }
  double cap() const { return cap_; }
  double spacing() const { return cap_ / static_cast<double>(k_); }
  int size() const { return k_ + 1; }
  double point(int l) const { return points_[static_cast<std::size_t>(l)]; }
  const std::vector<double>& points() const { return points_; }

  /// Index of the grid point nearest to x, breaking exact midpoint ties
  /// toward the lower index. x must lie in [0, cap] up to tolerance.
  int nearest_index(double x) const;

  bool operator==(const BidGrid& other) const {
    return k_ == other.k_ && cap_ == other.cap_;
  }
  bool operator!=(const BidGrid& other) const { return !(*this == other); }

 private:
  int k_;
  double cap_;
  std::vector<double> points_;
};

}  // namespace lotto
