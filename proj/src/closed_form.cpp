#include "lotto/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lotto {

namespace {

PiecewiseCdf degenerate_strategy(double budget, double threshold) {
  if (budget >= threshold) {
    return PiecewiseCdf::point_mass(threshold);
  }
  double top_mass = budget / threshold;
  return PiecewiseCdf({{0.0, 1.0 - top_mass}, {threshold, top_mass}}, {});
}

void require_positive_mass(double mass, const char* what) {
  if (!(mass > 0.0)) {
    throw std::logic_error(std::string("solve_two_player: regime misclassification, "
                                       "nonpositive mass for ") + what);
  }
}

}  // namespace

EquilibriumProfile solve_degenerate_threshold(const GameSpec& game) {
  if (!game.threshold) {
    throw std::domain_error("solve_degenerate_threshold: game has no threshold");
  }
  double t = *game.threshold;
  if (t > game.max_budget()) {
    throw std::domain_error("solve_degenerate_threshold: threshold exceeds every budget");
  }
  std::vector<Strategy> strategies;
  strategies.reserve(game.budgets.size());
  for (double b : game.budgets) strategies.emplace_back(degenerate_strategy(b, t));
  return EquilibriumProfile(game, std::move(strategies), Regime::kDegenerateThreshold, t);
}

TwoPlayerSolution solve_two_player(const GameSpec& game) {
  if (game.num_players() != 2) {
    throw std::invalid_argument("solve_two_player: exactly two players required");
  }
  int hi = game.budget_order()[0];
  int lo = game.budget_order()[1];
  double b1 = game.budgets[static_cast<std::size_t>(hi)];
  double b2 = game.budgets[static_cast<std::size_t>(lo)];
  if (b2 > b1) {
    throw std::logic_error("solve_two_player: budget ordering broken");
  }
  double t = game.threshold ? *game.threshold : game.default_bid_cap();

  if (b1 >= t) {
    EquilibriumProfile profile = solve_degenerate_threshold(game);
    profile.regime = Regime::kTwoPlayerHighBudget;
    const auto& f1 = std::get<PiecewiseCdf>(profile.strategies[static_cast<std::size_t>(hi)]);
    const auto& f2 = std::get<PiecewiseCdf>(profile.strategies[static_cast<std::size_t>(lo)]);
    TwoPlayerSolution out{Regime::kTwoPlayerHighBudget, t,
                          f2.left_value(t), f1.left_value(t), f2.left_value(t),
                          f1.value(t) - f1.left_value(t), f2.value(t) - f2.left_value(t),
                          std::move(profile)};
    return out;
  }

  // Both remaining regimes share the density pair: the stronger player
  // spreads 1/(2*B1) and the weaker player B2/(2*B1^2), with the weaker
  // player parking the leftover mass at 0.
  double d1 = 1.0 / (2.0 * b1);
  double d2 = b2 / (2.0 * b1 * b1);
  double f2_zero = 1.0 - b2 / b1;

  if (2.0 * b1 <= t) {  // low regime: the threshold never binds
    double top = 2.0 * b1;
    std::vector<Atom> atoms2;
    if (f2_zero > 0.0) atoms2.push_back({0.0, f2_zero});
    PiecewiseCdf f1({}, {{0.0, top, d1}});
    PiecewiseCdf f2(std::move(atoms2), {{0.0, top, d2}});
    std::vector<Strategy> strategies(2, Strategy{f1});
    strategies[static_cast<std::size_t>(hi)] = f1;
    strategies[static_cast<std::size_t>(lo)] = f2;
    std::vector<std::optional<AffinePair>> affine(2);
    affine[static_cast<std::size_t>(hi)] = AffinePair{d2, f2_zero};
    affine[static_cast<std::size_t>(lo)] = AffinePair{d1, 0.0};
    EquilibriumProfile profile(game, std::move(strategies), Regime::kTwoPlayerLowBudget, top,
                               std::move(affine));
    return TwoPlayerSolution{Regime::kTwoPlayerLowBudget, top, f2_zero, 1.0, 1.0,
                             0.0, 0.0, std::move(profile)};
  }

  // Mid regime: the density parts stop at L' = 2T - 2B1 and both players
  // put an atom on the threshold itself.
  double lp = 2.0 * (t - b1);
  double f1_break = (t - b1) / b1;
  double cap_mass_1 = (2.0 * b1 - t) / b1;
  double cap_mass_2 = b2 * (2.0 * b1 - t) / (b1 * b1);
  double f2_break = 1.0 - cap_mass_2;
  require_positive_mass(lp, "the density interval");
  require_positive_mass(cap_mass_1, "the stronger player's threshold atom");
  require_positive_mass(cap_mass_2, "the weaker player's threshold atom");

  PiecewiseCdf f1({{t, cap_mass_1}}, {{0.0, lp, d1}});
  std::vector<Atom> atoms2{{t, cap_mass_2}};
  if (f2_zero > 0.0) atoms2.push_back({0.0, f2_zero});
  PiecewiseCdf f2(std::move(atoms2), {{0.0, lp, d2}});
  std::vector<Strategy> strategies(2, Strategy{f1});
  strategies[static_cast<std::size_t>(hi)] = f1;
  strategies[static_cast<std::size_t>(lo)] = f2;
  std::vector<std::optional<AffinePair>> affine(2);
  affine[static_cast<std::size_t>(hi)] = AffinePair{d2, f2_zero};
  affine[static_cast<std::size_t>(lo)] = AffinePair{d1, 0.0};
  EquilibriumProfile profile(game, std::move(strategies), Regime::kTwoPlayerMidBudget, t,
                             std::move(affine));
  return TwoPlayerSolution{Regime::kTwoPlayerMidBudget, lp, f2_zero, f1_break, f2_break,
                           cap_mass_1, cap_mass_2, std::move(profile)};
}

}  // namespace lotto
