#include "lotto/profile.hpp"

#include <stdexcept>

namespace lotto {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kTwoPlayerLowBudget: return "two_player_low_budget";
    case Regime::kTwoPlayerMidBudget: return "two_player_mid_budget";
    case Regime::kTwoPlayerHighBudget: return "two_player_high_budget";
    case Regime::kDegenerateThreshold: return "degenerate_threshold";
    case Regime::kGridSolved: return "grid_solved";
  }
  return "unknown";
}

EquilibriumProfile::EquilibriumProfile(GameSpec game_in, std::vector<Strategy> strategies_in,
                                       Regime regime_in, double support_top_in,
                                       std::vector<std::optional<AffinePair>> affine_in)
    : game(std::move(game_in)),
      strategies(std::move(strategies_in)),
      regime(regime_in),
      support_top(support_top_in),
      affine(std::move(affine_in)) {
  if (strategies.size() != static_cast<std::size_t>(game.num_players())) {
    throw std::invalid_argument("EquilibriumProfile: one strategy per player required");
  }
  if (!affine.empty() && affine.size() != strategies.size()) {
    throw std::invalid_argument("EquilibriumProfile: affine data must cover every player or none");
  }
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (game.threshold &&
        strategy_support_max(strategies[i]) > *game.threshold + tol::kGeometry) {
      throw std::invalid_argument("EquilibriumProfile: support exceeds the threshold");
    }
    if (strategy_mean(strategies[i]) > game.budgets[i] + tol::kBudget) {
      throw std::invalid_argument("EquilibriumProfile: expected bid exceeds the budget");
    }
  }
}

}  // namespace lotto
