#pragma once

#include "lotto/profile.hpp"

namespace lotto {

/// Exact two-player equilibrium. Constants are reported for the internally
/// sorted labeling (player 1 holds the larger budget); `profile` maps the
/// strategies back to the caller's player order.
struct TwoPlayerSolution {
  Regime regime;
  /// Upper end of the constant-density part: 2*B1 in the low regime,
  /// L' = 2T - 2B1 in the mid regime, T in the high regime.
  double support_break = 0.0;
  double f2_at_zero = 0.0;
  double f1_at_break = 0.0;
  double f2_at_break = 0.0;
  double atom_mass_at_cap_1 = 0.0;
  double atom_mass_at_cap_2 = 0.0;
  EquilibriumProfile profile;
};

/// Equilibrium when the threshold is at most the largest budget: players
/// with budget >= T bid T outright; the rest mix between 0 and T with the
/// budget-exhausting split. Throws std::domain_error when no threshold is
/// present or the threshold exceeds every budget.
EquilibriumProfile solve_degenerate_threshold(const GameSpec& game);

/// Exact two-player equilibrium for any threshold position (a game without
/// a threshold is solved under the non-binding cap 2^(2n+1) * max budget).
/// Throws std::invalid_argument unless the game has exactly two players.
TwoPlayerSolution solve_two_player(const GameSpec& game);

}  // namespace lotto
