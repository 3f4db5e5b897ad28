#include "lotto/utility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lotto {

namespace {

std::vector<const Strategy*> make_view(std::span<const Strategy> strategies) {
  std::vector<const Strategy*> view;
  view.reserve(strategies.size());
  for (const Strategy& s : strategies) view.push_back(&s);
  return view;
}

std::vector<const Strategy*> make_opponent_view(std::span<const Strategy> profile, int player) {
  if (player < 0 || static_cast<std::size_t>(player) >= profile.size()) {
    throw std::invalid_argument("player index out of range");
  }
  std::vector<const Strategy*> view;
  view.reserve(profile.size() - 1);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (static_cast<int>(i) != player) view.push_back(&profile[i]);
  }
  return view;
}

void require_consistent_grids(const Strategy* own, std::span<const Strategy* const> opponents) {
  const BidGrid* seen = nullptr;
  auto visit_one = [&seen](const Strategy* s) {
    const auto* d = std::get_if<DiscreteStrategy>(s);
    if (d == nullptr) return;
    if (seen == nullptr) {
      seen = &d->grid();
    } else if (*seen != d->grid()) {
      throw std::domain_error("grid strategies live on mismatched grids");
    }
  };
  if (own != nullptr) visit_one(own);
  for (const Strategy* s : opponents) visit_one(s);
}

/// Win probability from per-opponent comparison summaries: expand
/// prod_j (below_j + equal_j z) and weight the z^m coefficient by 1/(m+1).
double win_prob_from_summaries(const std::vector<OpponentSummary>& summaries) {
  std::vector<double> coef{1.0};
  for (const OpponentSummary& s : summaries) {
    if (s.equal == 0.0) {
      for (double& c : coef) c *= s.below;
    } else {
      std::vector<double> next(coef.size() + 1, 0.0);
      for (std::size_t i = 0; i < coef.size(); ++i) {
        next[i] += coef[i] * s.below;
        next[i + 1] += coef[i] * s.equal;
      }
      coef = std::move(next);
    }
  }
  double p = 0.0;
  for (std::size_t m = 0; m < coef.size(); ++m) {
    p += coef[m] / static_cast<double>(m + 1);
  }
  return p;
}

double win_prob_impl(double x, std::span<const Strategy* const> opponents) {
  std::vector<OpponentSummary> summaries;
  summaries.reserve(opponents.size());
  for (const Strategy* s : opponents) summaries.push_back(summarize_at(*s, x));
  return win_prob_from_summaries(summaries);
}

/// Integral over [a, b] of prod_j (F_j(t) * ...), expressed in the local
/// coordinate t - a where every opponent cdf is affine: const_j + slope_j t.
double integrate_product(double len, const std::vector<double>& consts,
                         const std::vector<double>& slopes) {
  std::vector<double> coef{1.0};
  for (std::size_t j = 0; j < consts.size(); ++j) {
    if (slopes[j] == 0.0) {
      for (double& c : coef) c *= consts[j];
    } else {
      std::vector<double> next(coef.size() + 1, 0.0);
      for (std::size_t i = 0; i < coef.size(); ++i) {
        next[i] += coef[i] * consts[j];
        next[i + 1] += coef[i] * slopes[j];
      }
      coef = std::move(next);
    }
  }
  double integral = 0.0;
  double len_pow = len;
  for (std::size_t d = 0; d < coef.size(); ++d) {
    integral += coef[d] * len_pow / static_cast<double>(d + 1);
    len_pow *= len;
  }
  return integral;
}

double expected_utility_impl(const Strategy& own, std::span<const Strategy* const> opponents) {
  require_consistent_grids(&own, opponents);
  double u = 0.0;
  if (const auto* d = std::get_if<DiscreteStrategy>(&own)) {
    for (std::size_t l = 0; l < d->probs().size(); ++l) {
      double p = d->probs()[l];
      if (p > 0.0) u += p * win_prob_impl(d->grid().point(static_cast<int>(l)), opponents);
    }
    return u;
  }
  const auto& cdf = std::get<PiecewiseCdf>(own);
  for (const Atom& a : cdf.atoms()) {
    u += a.mass * win_prob_impl(a.location, opponents);
  }
  if (cdf.segments().empty()) return u;
  std::vector<double> cuts;
  for (const Strategy* s : opponents) {
    std::vector<double> pts = strategy_breakpoints(*s);
    cuts.insert(cuts.end(), pts.begin(), pts.end());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> consts(opponents.size());
  std::vector<double> slopes(opponents.size());
  for (const Segment& seg : cdf.segments()) {
    if (seg.density == 0.0) continue;
    std::vector<double> edges{seg.lo};
    auto first = std::upper_bound(cuts.begin(), cuts.end(), seg.lo);
    for (auto it = first; it != cuts.end() && *it < seg.hi; ++it) edges.push_back(*it);
    edges.push_back(seg.hi);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      double a = edges[e];
      double b = edges[e + 1];
      if (!(b > a)) continue;
      double mid = 0.5 * (a + b);
      for (std::size_t j = 0; j < opponents.size(); ++j) {
        consts[j] = strategy_eval(*opponents[j], a).value;
        slopes[j] = strategy_density_at(*opponents[j], mid);
      }
      u += seg.density * integrate_product(b - a, consts, slopes);
    }
  }
  return u;
}

std::vector<double> utility_curve_impl(const BidGrid& grid,
                                       std::span<const Strategy* const> opponents) {
  for (const Strategy* s : opponents) {
    const auto* d = std::get_if<DiscreteStrategy>(s);
    if (d != nullptr && d->grid() != grid) {
      throw std::domain_error("utility_curve: opponent lives on a different grid");
    }
  }
  std::vector<double> curve(static_cast<std::size_t>(grid.size()));
  for (int l = 0; l < grid.size(); ++l) {
    curve[static_cast<std::size_t>(l)] = win_prob_impl(grid.point(l), opponents);
  }
  return curve;
}

}  // namespace

OpponentSummary summarize_at(const Strategy& s, double x) {
  CdfValue cv = strategy_eval(s, x);
  OpponentSummary out;
  out.below = cv.left_limit;
  out.equal = std::max(cv.value - cv.left_limit, 0.0);
  out.above = std::max(1.0 - cv.value, 0.0);
  return out;
}

double win_prob(double x, std::span<const Strategy> opponents) {
  std::vector<const Strategy*> view = make_view(opponents);
  return win_prob_impl(x, view);
}

double win_prob(double x, std::span<const Strategy* const> opponents) {
  return win_prob_impl(x, opponents);
}

double expected_utility(const Strategy& own, std::span<const Strategy> opponents) {
  std::vector<const Strategy*> view = make_view(opponents);
  return expected_utility_impl(own, view);
}

double expected_utility(const Strategy& own, std::span<const Strategy* const> opponents) {
  return expected_utility_impl(own, opponents);
}

double expected_utility(std::span<const Strategy> profile, int player) {
  std::vector<const Strategy*> view = make_opponent_view(profile, player);
  return expected_utility_impl(profile[static_cast<std::size_t>(player)], view);
}

std::vector<double> utility_curve(const BidGrid& grid, std::span<const Strategy> opponents) {
  std::vector<const Strategy*> view = make_view(opponents);
  return utility_curve_impl(grid, view);
}

std::vector<double> utility_curve(const BidGrid& grid,
                                  std::span<const Strategy* const> opponents) {
  return utility_curve_impl(grid, opponents);
}

std::vector<double> utility_curve(const BidGrid& grid, std::span<const Strategy> profile,
                                  int player) {
  std::vector<const Strategy*> view = make_opponent_view(profile, player);
  return utility_curve_impl(grid, view);
}

}  // namespace lotto
