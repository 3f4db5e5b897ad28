#include "lotto/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lotto {

GameSpec::GameSpec(std::vector<double> budgets_in, std::optional<double> threshold_in)
    : budgets(std::move(budgets_in)), threshold(threshold_in) {
  if (budgets.size() < 2) {
    throw std::invalid_argument("GameSpec: at least two players required");
  }
  for (double b : budgets) {
    if (!(b > 0.0) || !std::isfinite(b)) {
      throw std::invalid_argument("GameSpec: budgets must be positive and finite");
    }
  }
  if (threshold && (!(*threshold > 0.0) || !std::isfinite(*threshold))) {
    throw std::invalid_argument("GameSpec: threshold must be positive and finite");
  }
  budget_order_.resize(budgets.size());
  std::iota(budget_order_.begin(), budget_order_.end(), 0);
  std::stable_sort(budget_order_.begin(), budget_order_.end(),
                   [this](int a, int b) { return budgets[static_cast<std::size_t>(a)] >
                                                 budgets[static_cast<std::size_t>(b)]; });
}

double GameSpec::max_budget() const {
  return *std::max_element(budgets.begin(), budgets.end());
}

double GameSpec::default_bid_cap() const {
  return std::ldexp(max_budget(), 2 * num_players() + 1);
}

BidGrid::BidGrid(int k, double cap) : k_(k), cap_(cap) {
  if (k < 1) {
    throw std::invalid_argument("BidGrid: resolution must be at least 1");
  }
  if (!(cap > 0.0) || !std::isfinite(cap)) {
    throw std::invalid_argument("BidGrid: cap must be positive and finite");
  }
  points_.resize(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l < k; ++l) {
    points_[static_cast<std::size_t>(l)] = cap * static_cast<double>(l) / static_cast<double>(k);
  }
  points_.back() = cap;  // exact, independent of rounding in the formula above
}

int BidGrid::nearest_index(double x) const {
  if (!(x >= -tol::kGeometry) || x > cap_ + tol::kGeometry) {
    throw std::domain_error("BidGrid::nearest_index: point outside [0, cap]");
  }
  double pos = x / spacing();
  int l = static_cast<int>(std::ceil(pos - 0.5));  // exact midpoints round down
  return std::clamp(l, 0, k_);
}

}  // namespace lotto
