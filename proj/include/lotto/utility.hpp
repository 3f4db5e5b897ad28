#pragma once

#include <span>
#include <vector>

#include "lotto/strategy.hpp"

namespace lotto {

/// How an opponent's bid compares to a fixed bid x.
struct OpponentSummary {
  double below = 0.0;
  double equal = 0.0;
  double above = 0.0;
};

OpponentSummary summarize_at(const Strategy& s, double x);

/// Probability that a bid of x wins the prize against independent opponents,
/// with ties split uniformly among the tied bidders. Computed exactly by
/// expanding the tie-count distribution: if m opponents tie, the bid wins
/// with probability 1/(m+1).
double win_prob(double x, std::span<const Strategy> opponents);
double win_prob(double x, std::span<const Strategy* const> opponents);

/// Expected prize share of `own` against independent opponents. Exact:
/// atom bids use win_prob directly, and each constant-density piece is
/// integrated in closed form after refining by every opponent breakpoint
/// (between breakpoints the integrand is a polynomial of degree at most the
/// number of opponents).
///
/// Throws std::domain_error if two grid strategies involved in the
/// computation live on different grids.
double expected_utility(const Strategy& own, std::span<const Strategy> opponents);
double expected_utility(const Strategy& own, std::span<const Strategy* const> opponents);
double expected_utility(std::span<const Strategy> profile, int player);

/// win_prob evaluated at every grid point. Grid opponents must live on the
/// same grid.
std::vector<double> utility_curve(const BidGrid& grid, std::span<const Strategy> opponents);
std::vector<double> utility_curve(const BidGrid& grid, std::span<const Strategy* const> opponents);
std::vector<double> utility_curve(const BidGrid& grid, std::span<const Strategy> profile, int player);

}  // namespace lotto
