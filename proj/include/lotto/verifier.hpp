#pragma once

#include <string>
#include <vector>

#include "lotto/profile.hpp"

namespace lotto {

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;   // measured worst violation (0 when clean)
  double tolerance = 0.0;  // what the residual was compared against
  std::string details;
};

struct DiagnosticsReport {
  std::vector<CheckResult> checks;
  bool overall() const {
    for (const CheckResult& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Dust cutoff separating carried mass from averaging residue in a grid
/// strategy: max_mass * min(10/k, 1/2).
double dust_threshold(const DiscreteStrategy& s);

/// Support features the structural checks share. Grid strategies are read
/// through the dust threshold; point masses that tower over both neighbors
/// (4x) count as atoms.
struct SupportSummary {
  double mass_at_zero = 0.0;                         // F(0)
  double beta = 0.0;                                 // smallest positive support point
  bool has_positive_support = false;                 // any support above 0
  double top = 0.0;                                  // largest support point
  std::vector<std::pair<double, double>> intervals;  // merged closure pieces
  std::vector<double> atom_locations;
  double location_tol = 0.0;  // resolution for endpoint comparisons
};

SupportSummary summarize_support(const Strategy& s);

/// Prize share is affine in the bid on each player's own support, with
/// positive slope, nonnegative intercepts, at most one of them positive,
/// and the affine line dominating the share off support. Requires exact
/// piecewise strategies.
CheckResult check_affine_on_support(const EquilibriumProfile& profile);

/// No bid strictly between 0 and the threshold is an atom of two players.
CheckResult check_atoms(const EquilibriumProfile& profile);

/// Supports (threshold atoms aside) jointly cover one interval [0, L], each
/// player's positive support is one interval reaching L, every player has
/// support near 0, and every positive bid wins with positive probability.
CheckResult check_support_structure(const EquilibriumProfile& profile);

/// Larger budgets enter the bidding lower: lowest positive support points
/// are nondecreasing as budgets decrease, a strictly richest player has no
/// mass at 0 and spans the whole interval, everyone else holds back mass at
/// 0, monotonically in budget.
CheckResult check_budget_ordering(const EquilibriumProfile& profile);

/// No support point exceeds 2^(2n+1) * max budget.
CheckResult check_bid_bound(const EquilibriumProfile& profile);

/// Discretizes the profile on an audit grid of resolution k_audit (at least
/// 1000) and measures exploitability. Default tolerance 1e-3 for exact
/// constructions, 1e-2 for grid-solved profiles; pass tolerance_override to
/// pin it. Details document the resolution limit a coarse solve imposes.
CheckResult check_epsilon_nash(const EquilibriumProfile& profile, int k_audit,
                               double tolerance_override = 0.0);

/// With a binding threshold (some budget >= T) the richest player bids T
/// outright and everyone else mixes on {0, T}; otherwise the number of
/// players whose support closure contains T is never exactly one, supports
/// are {0} u [c_i, L'] (u {T}), at least two players reach down to c_i = 0,
/// and someone has no mass at 0.
CheckResult check_threshold_structure(const EquilibriumProfile& profile);

/// Runs every check whose hypotheses the profile satisfies.
DiagnosticsReport run_applicable_checks(const EquilibriumProfile& profile, int k_audit);

}  // namespace lotto
