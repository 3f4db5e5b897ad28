#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lotto/profile.hpp"
#include "lotto/rng.hpp"
#include "lotto/strategy.hpp"

namespace testutil {

/// Random mixed strategy: up to two atoms plus up to two uniform pieces on
/// [0, top], normalized to total mass 1. Always has positive total mass.
inline lotto::PiecewiseCdf random_piecewise(lotto::Rng& rng, double top) {
  for (;;) {
    std::vector<lotto::Atom> atoms;
    std::vector<lotto::Segment> segments;
    double mass = 0.0;
    if (rng.uniform() < 0.6) {
      double m = 0.1 + 0.8 * rng.uniform();
      atoms.push_back({0.0, m});
      mass += m;
    }
    if (rng.uniform() < 0.4) {
      double m = 0.1 + 0.8 * rng.uniform();
      atoms.push_back({top, m});
      mass += m;
    }
    double lo = 0.0;
    int pieces = 1 + (rng.uniform() < 0.5 ? 1 : 0);
    for (int p = 0; p < pieces && lo < 0.8 * top; ++p) {
      double hi = lo + (top - lo) * (0.2 + 0.6 * rng.uniform());
      double density = 0.2 + rng.uniform();
      segments.push_back({lo, hi, density});
      mass += density * (hi - lo);
      lo = hi;
    }
    if (mass <= 0.0) continue;
    for (auto& a : atoms) a.mass /= mass;
    for (auto& s : segments) s.density /= mass;
    // segment upper ends may coincide with the atom at top; that is legal
    return lotto::PiecewiseCdf(std::move(atoms), std::move(segments));
  }
}

inline lotto::DiscreteStrategy random_grid_strategy(lotto::Rng& rng, const lotto::BidGrid& grid) {
  std::vector<double> probs(static_cast<std::size_t>(grid.size()), 0.0);
  double mass = 0.0;
  for (auto& p : probs) {
    if (rng.uniform() < 0.4) {
      p = rng.uniform();
      mass += p;
    }
  }
  if (mass <= 0.0) {
    probs[0] = 1.0;
    mass = 1.0;
  }
  for (auto& p : probs) p /= mass;
  // absorb float rounding into the last positive point so the sum is exact
  double sum = 0.0;
  for (double p : probs) sum += p;
  for (std::size_t l = probs.size(); l-- > 0;) {
    if (probs[l] > 0.0) {
      probs[l] += 1.0 - sum;
      break;
    }
  }
  return lotto::DiscreteStrategy(grid, std::move(probs));
}

/// Reference optimum by enumeration: every affordable pure bid and every
/// budget-tight two-point mixture. Exhaustive, so independent of the
/// envelope construction under test.
inline double brute_force_value(const std::vector<double>& u, double budget,
                                const lotto::BidGrid& grid) {
  double best = 0.0;
  int k = grid.resolution();
  for (int l = 0; l <= k; ++l) {
    if (grid.point(l) <= budget) best = std::max(best, u[static_cast<std::size_t>(l)]);
  }
  for (int lo = 0; lo <= k; ++lo) {
    double x_lo = grid.point(lo);
    if (x_lo >= budget) continue;
    for (int hi = lo + 1; hi <= k; ++hi) {
      double x_hi = grid.point(hi);
      if (x_hi <= budget) continue;
      double w = (budget - x_lo) / (x_hi - x_lo);  // weight on the high point
      double value =
          (1.0 - w) * u[static_cast<std::size_t>(lo)] + w * u[static_cast<std::size_t>(hi)];
      best = std::max(best, value);
    }
  }
  return best;
}

/// Solution of the four budget/indifference equations that pin the
/// mid-budget two-player equilibrium: unknowns (break L, F1 at the break,
/// F2 at zero, F2 at the break). Solved here by damped Newton with a
/// finite-difference Jacobian, independently of any closed-form expression.
struct MidBudgetSolution {
  double support_break = 0.0;
  double f1_at_break = 0.0;
  double f2_at_zero = 0.0;
  double f2_at_break = 0.0;
};

inline MidBudgetSolution solve_mid_budget_equations(double b1, double b2, double t) {
  auto residuals = [&](const double* v, double* r) {
    double lp = v[0], f1l = v[1], f20 = v[2], f2l = v[3];
    // both players indifferent: the prize share gained per unit of bid on
    // (0, L) must match the rate earned by moving mass into the cap atom
    r[0] = f1l / lp - (1.0 - f1l) / (2.0 * (t - lp));
    r[1] = (f2l - f20) / lp - (1.0 - f2l) / (2.0 * (t - lp));
    // budgets exhausted exactly
    r[2] = f1l * lp / 2.0 + (1.0 - f1l) * t - b1;
    r[3] = (f2l - f20) * lp / 2.0 + (1.0 - f2l) * t - b2;
  };
  double v[4] = {t * 0.5, 0.5, 0.3, 0.6};
  double r[4], rp[4], jac[4][4];
  for (int iter = 0; iter < 200; ++iter) {
    residuals(v, r);
    double norm = 0.0;
    for (double x : r) norm = std::max(norm, std::abs(x));
    if (norm < 1e-13) break;
    for (int j = 0; j < 4; ++j) {
      double save = v[j];
      double h = 1e-7 * (1.0 + std::abs(save));
      v[j] = save + h;
      residuals(v, rp);
      v[j] = save;
      for (int i = 0; i < 4; ++i) jac[i][j] = (rp[i] - r[i]) / h;
    }
    // solve jac * dx = -r by Gaussian elimination with partial pivoting
    double a[4][5];
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) a[i][j] = jac[i][j];
      a[i][4] = -r[i];
    }
    for (int c = 0; c < 4; ++c) {
      int piv = c;
      for (int i = c + 1; i < 4; ++i) {
        if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
      }
      for (int j = 0; j < 5; ++j) std::swap(a[c][j], a[piv][j]);
      if (a[c][c] == 0.0) throw std::runtime_error("singular Jacobian");
      for (int i = c + 1; i < 4; ++i) {
        double f = a[i][c] / a[c][c];
        for (int j = c; j < 5; ++j) a[i][j] -= f * a[c][j];
      }
    }
    double dx[4];
    for (int i = 3; i >= 0; --i) {
      double s = a[i][4];
      for (int j = i + 1; j < 4; ++j) s -= a[i][j] * dx[j];
      dx[i] = s / a[i][i];
    }
    double step = 1.0;
    for (int i = 0; i < 4; ++i) {
      // keep the break inside (0, t) during iteration
      while (step > 1e-6 && (v[0] + step * dx[0] <= 0.0 || v[0] + step * dx[0] >= t)) {
        step *= 0.5;
      }
    }
    for (int i = 0; i < 4; ++i) v[i] += step * dx[i];
  }
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace testutil
