#pragma once

#include <variant>
#include <vector>

#include "lotto/game.hpp"
#include "lotto/rng.hpp"

namespace lotto {

/// Point mass: bid `location` with probability `mass`.
struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

/// Uniform-density piece: bids spread over [lo, hi] with constant density,
/// carrying total mass density * (hi - lo).
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double density = 0.0;
};

/// Right limit and left limit of a cdf at a point.
struct CdfValue {
  double value = 0.0;       // F(x)
  double left_limit = 0.0;  // F(x^-)
};

/// Mixed bid distribution represented exactly as point masses plus
/// constant-density pieces. This covers every equilibrium the closed-form
/// solvers produce, so evaluation, moments, quantiles and discretization
/// are all exact (no quadrature anywhere).
///
/// Validity requirements, enforced at construction:
///   - atom locations >= 0, masses in (0, 1], strictly increasing locations;
///   - segments have 0 <= lo < hi, density >= 0, disjoint and sorted;
///   - no atom strictly inside a segment (endpoints are fine);
///   - total mass equals 1 within 1e-12.
class PiecewiseCdf {
 public:
  PiecewiseCdf(std::vector<Atom> atoms, std::vector<Segment> segments);

  static PiecewiseCdf point_mass(double x);
  static PiecewiseCdf uniform(double lo, double hi);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// F(x) and F(x^-); x must be >= 0.
  CdfValue eval(double x) const;
  double value(double x) const { return eval(x).value; }
  double left_value(double x) const { return eval(x).left_limit; }

  /// Probability density at x, or 0 where no segment covers x. At a shared
  /// segment endpoint the piece to the right wins; callers probing an open
  /// interval should pass its midpoint.
  double density_at(double x) const;

  double mean() const;
  double support_min() const;
  double support_max() const;

  /// Generalized inverse cdf: smallest x with F(x) >= u, for u in [0, 1].
  double quantile(double u) const;
  double sample(Rng& rng) const { return quantile(rng.uniform()); }

  /// Atom locations and segment endpoints, sorted and deduplicated.
  std::vector<double> breakpoints() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Segment> segments_;
  std::vector<double> atom_cum_;  // cumulative atom mass, atom_cum_[i] = sum of first i
  std::vector<double> seg_cum_;   // cumulative segment mass, same convention
};

/// Probability vector over the points of a BidGrid.
///
/// Probabilities are nonnegative and sum to 1 within 1e-12. Budget
/// feasibility is a property of the owning player, checked separately via
/// validate_budget.
class DiscreteStrategy {
 public:
  DiscreteStrategy(BidGrid grid, std::vector<double> probs);

  const BidGrid& grid() const { return grid_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(int l) const { return probs_[static_cast<std::size_t>(l)]; }

  CdfValue eval(double x) const;
  double mean() const;
  double support_min() const;
  double support_max() const;

  double quantile(double u) const;
  double sample(Rng& rng) const { return quantile(rng.uniform()); }

  /// Throws if the expected bid exceeds budget + 1e-9.
  void validate_budget(double budget) const;

 private:
  BidGrid grid_;
  std::vector<double> probs_;
  std::vector<double> cum_;  // cum_[l] = sum of probs_[0..l-1]
};

/// A player's strategy in either exact or grid form.
using Strategy = std::variant<PiecewiseCdf, DiscreteStrategy>;

CdfValue strategy_eval(const Strategy& s, double x);
double strategy_mean(const Strategy& s);
double strategy_support_min(const Strategy& s);
double strategy_support_max(const Strategy& s);
double strategy_sample(const Strategy& s, Rng& rng);

/// Sorted, deduplicated locations where the cdf changes shape (atoms,
/// segment endpoints, or grid points carrying mass).
std::vector<double> strategy_breakpoints(const Strategy& s);

/// Density of the continuous part at x (0 for grid strategies).
double strategy_density_at(const Strategy& s, double x);

/// Midpoint-rule projection onto a grid: the mass between consecutive
/// midpoints moves to the enclosed grid point; both tails are absorbed by
/// the end points, and mass exactly on a midpoint goes to the lower point.
/// The source support must lie within [0, grid.cap()]; the expected bid
/// moves by at most grid.spacing().
DiscreteStrategy discretize(const PiecewiseCdf& cdf, const BidGrid& grid);
DiscreteStrategy discretize(const DiscreteStrategy& s, const BidGrid& grid);
DiscreteStrategy discretize(const Strategy& s, const BidGrid& grid);

/// Atom-only exact conversion of a grid strategy.
PiecewiseCdf to_piecewise(const DiscreteStrategy& s);

}  // namespace lotto
