#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lotto/strategy.hpp"

namespace lotto {

/// Which construction produced a profile.
enum class Regime {
  kTwoPlayerLowBudget,   // leader budget at most half the threshold
  kTwoPlayerMidBudget,   // leader budget strictly between half the threshold and it
  kTwoPlayerHighBudget,  // leader budget at least the threshold
  kDegenerateThreshold,  // threshold at most the largest budget, any player count
  kGridSolved,           // produced by the iterative grid solver
};

std::string regime_name(Regime r);

/// In equilibrium each player's prize share is affine in the bid on their own
/// support: share = slope * bid + intercept.
struct AffinePair {
  double slope = 0.0;
  double intercept = 0.0;
};

/// A full strategy profile together with the metadata the verifier consumes.
///
/// Construction checks the cheap structural facts: one strategy per player,
/// supports inside [0, threshold] when a threshold is present, and expected
/// bids within budget (slack 1e-9). Everything substantive lives in the
/// verifier module.
struct EquilibriumProfile {
  GameSpec game;
  std::vector<Strategy> strategies;
  Regime regime;
  /// Common support supremum L.
  double support_top = 0.0;
  /// Per-player affine prize-share coefficients where the construction knows
  /// them in closed form; empty or nullopt entries otherwise.
  std::vector<std::optional<AffinePair>> affine;

  EquilibriumProfile(GameSpec game, std::vector<Strategy> strategies, Regime regime,
                     double support_top,
                     std::vector<std::optional<AffinePair>> affine = {});

  int num_players() const { return game.num_players(); }
};

}  // namespace lotto
