#include "lotto/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lotto/solver.hpp"
#include "lotto/strutil.hpp"
#include "lotto/utility.hpp"

namespace lotto {

namespace {

constexpr double kAffineDominanceTol = 1e-6;
constexpr double kPositiveInterceptCut = 1e-6;

struct Piece {
  double lo = 0.0;
  double hi = 0.0;
};

std::vector<Piece> merge_pieces(std::vector<Piece> pieces, double gap_tol) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Piece> merged;
  for (const Piece& p : pieces) {
    if (!merged.empty() && p.lo <= merged.back().hi + gap_tol) {
      merged.back().hi = std::max(merged.back().hi, p.hi);
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

/// Per-player structural facts, with threshold atoms split out so the
/// interval checks see the support the way the threshold-free statements
/// describe it.
struct StructView {
  bool is_grid = false;
  double dust = 0.0;
  double loc_tol = tol::kGeometry;
  double gap_tol = tol::kGeometry;
  double top_tol = tol::kGeometry;
  /// Two atoms count as one location within this radius. Half a grid cell:
  /// same-grid atoms must sit on the same point, and an exact atom matches
  /// the grid point it would round to.
  double atom_match_tol = tol::kGeometry;
  double f_at_zero = 0.0;
  std::vector<double> atoms;          // atom locations, threshold atom included
  std::vector<Piece> reduced;         // support closure minus threshold atoms
  bool touches_threshold = false;     // threshold in the full support closure
  double continuous_top = 0.0;        // top of the non-atom support
  bool has_beta = false;
  double beta = 0.0;                  // smallest positive support point, full view
  double full_top = 0.0;
  double raw_top = 0.0;               // before dust filtering (grids)
};

StructView build_view(const Strategy& s, const std::optional<double>& threshold) {
  StructView v;
  if (const auto* cdf = std::get_if<PiecewiseCdf>(&s)) {
    v.f_at_zero = cdf->value(0.0);
    v.full_top = cdf->support_max();
    v.raw_top = v.full_top;
    std::vector<Piece> pieces;
    for (const Segment& seg : cdf->segments()) {
      if (seg.density > 0.0) {
        pieces.push_back({seg.lo, seg.hi});
        v.continuous_top = std::max(v.continuous_top, seg.hi);
      }
    }
    for (const Atom& a : cdf->atoms()) {
      v.atoms.push_back(a.location);
      bool at_threshold = threshold && std::abs(a.location - *threshold) <= v.loc_tol;
      if (!at_threshold) pieces.push_back({a.location, a.location});
    }
    v.touches_threshold =
        threshold && (std::abs(v.full_top - *threshold) <= v.loc_tol);
    v.reduced = merge_pieces(std::move(pieces), v.gap_tol);
  } else {
    const auto& d = std::get<DiscreteStrategy>(s);
    int k = d.grid().resolution();
    double spacing = d.grid().spacing();
    v.is_grid = true;
    v.dust = dust_threshold(d);
    v.loc_tol = spacing + tol::kGeometry;
    v.gap_tol = 2.0 * spacing + tol::kGeometry;
    v.top_tol = spacing + tol::kGeometry;
    v.atom_match_tol = 0.5 * spacing;
    v.f_at_zero = d.prob(0);
    v.raw_top = d.support_max();
    const std::vector<double>& p = d.probs();
    std::vector<int> carried;
    for (int l = 0; l <= k; ++l) {
      if (p[static_cast<std::size_t>(l)] > v.dust) carried.push_back(l);
    }
    auto neighbor = [&](int l) {
      double left = l > 0 ? p[static_cast<std::size_t>(l - 1)] : 0.0;
      double right = l < k ? p[static_cast<std::size_t>(l + 1)] : 0.0;
      return std::max(left, right);
    };
    std::vector<int> atom_idx;
    for (int l : carried) {
      if (p[static_cast<std::size_t>(l)] >= 4.0 * neighbor(l)) {
        atom_idx.push_back(l);
        v.atoms.push_back(d.grid().point(l));
      }
    }
    for (int l : carried) {
      bool is_atom = std::binary_search(atom_idx.begin(), atom_idx.end(), l);
      if (!is_atom) v.continuous_top = std::max(v.continuous_top, d.grid().point(l));
    }
    v.touches_threshold = threshold && !carried.empty() && carried.back() == k;
    if (!carried.empty()) v.full_top = d.grid().point(carried.back());
    std::vector<Piece> runs;
    for (std::size_t i = 0; i < carried.size(); ++i) {
      double x = d.grid().point(carried[i]);
      if (!runs.empty() && carried[i] - carried[i - 1] <= 2) {
        runs.back().hi = x;
      } else {
        runs.push_back({x, x});
      }
    }
    // A lone spike on the threshold itself belongs to the threshold checks,
    // not the interval structure.
    if (threshold && !runs.empty() && !carried.empty() && carried.back() == k &&
        runs.back().lo == runs.back().hi &&
        std::binary_search(atom_idx.begin(), atom_idx.end(), k)) {
      runs.pop_back();
    }
    v.reduced = std::move(runs);
  }
  for (const Piece& piece : v.reduced) {
    if (piece.hi > 0.0) {
      v.has_beta = true;
      v.beta = std::max(piece.lo, 0.0);
      break;
    }
  }
  if (!v.has_beta) {
    for (double a : v.atoms) {
      if (a > 0.0) {
        v.has_beta = true;
        v.beta = a;
        break;
      }
    }
  }
  return v;
}

std::vector<StructView> build_views(const EquilibriumProfile& profile) {
  std::vector<StructView> views;
  views.reserve(profile.strategies.size());
  for (const Strategy& s : profile.strategies) {
    views.push_back(build_view(s, profile.game.threshold));
  }
  return views;
}

bool all_piecewise(const EquilibriumProfile& profile) {
  for (const Strategy& s : profile.strategies) {
    if (!std::holds_alternative<PiecewiseCdf>(s)) return false;
  }
  return true;
}

double reduced_top(const std::vector<StructView>& views) {
  double top = 0.0;
  for (const StructView& v : views) {
    if (!v.reduced.empty()) top = std::max(top, v.reduced.back().hi);
  }
  return top;
}

struct AffineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  int samples = 0;
};

AffineFit fit_affine(const std::vector<std::pair<double, double>>& pts) {
  AffineFit fit;
  fit.samples = static_cast<int>(pts.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(pts.size());
  double denom = m * sxx - sx * sx;
  fit.slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  fit.intercept = (sy - fit.slope * sx) / m;
  for (const auto& [x, y] : pts) {
    fit.residual = std::max(fit.residual, std::abs(y - fit.slope * x - fit.intercept));
  }
  return fit;
}

}  // namespace

double dust_threshold(const DiscreteStrategy& s) {
  double max_mass = *std::max_element(s.probs().begin(), s.probs().end());
  double k = static_cast<double>(s.grid().resolution());
  return max_mass * std::min(10.0 / k, 0.5);
}

SupportSummary summarize_support(const Strategy& s) {
  StructView v = build_view(s, std::nullopt);
  SupportSummary out;
  out.mass_at_zero = v.f_at_zero;
  out.beta = v.beta;
  out.has_positive_support = v.has_beta;
  out.top = v.full_top;
  for (const Piece& p : v.reduced) out.intervals.push_back({p.lo, p.hi});
  out.atom_locations = v.atoms;
  out.location_tol = v.loc_tol;
  return out;
}

CheckResult check_affine_on_support(const EquilibriumProfile& profile) {
  if (!all_piecewise(profile)) {
    throw std::invalid_argument("check_affine_on_support: exact piecewise strategies required");
  }
  int n = profile.num_players();
  double fit_tol = 1e-6 * static_cast<double>(n);
  CheckResult out{"affine_utility_on_support", true, 0.0, fit_tol, ""};
  double domain_top = profile.game.threshold.value_or(profile.support_top);
  int positive_intercepts = 0;

  for (int i = 0; i < n; ++i) {
    const auto& own = std::get<PiecewiseCdf>(profile.strategies[static_cast<std::size_t>(i)]);
    std::vector<const Strategy*> opponents;
    for (int j = 0; j < n; ++j) {
      if (j != i) opponents.push_back(&profile.strategies[static_cast<std::size_t>(j)]);
    }

    double total_len = 0.0;
    for (const Segment& seg : own.segments()) total_len += seg.hi - seg.lo;
    std::vector<std::pair<double, double>> samples;
    for (const Segment& seg : own.segments()) {
      if (!(seg.density > 0.0)) continue;
      double len = seg.hi - seg.lo;
      int m = std::max(2, static_cast<int>(std::lround(1000.0 * len / total_len)));
      for (int j = 0; j < m; ++j) {
        double x = seg.lo + len * (static_cast<double>(j) + 1.0) / (static_cast<double>(m) + 1.0);
        if (x > 0.0) samples.push_back({x, win_prob(x, opponents)});
      }
    }
    for (const Atom& a : own.atoms()) {
      if (a.location > 0.0) samples.push_back({a.location, win_prob(a.location, opponents)});
    }

    if (samples.size() < 2) {
      out.details += strf("p%d: fewer than two positive-bid support points, affine form trivial; ", i);
      continue;
    }

    AffineFit fit = fit_affine(samples);
    out.residual = std::max(out.residual, fit.residual);
    bool player_ok = fit.residual <= fit_tol && fit.slope > 0.0 && fit.intercept >= -tol::kGeometry;

    // The fitted line must also dominate the prize share off support.
    double worst_excess = 0.0;
    for (int j = 0; j < 256; ++j) {
      double x = domain_top * (static_cast<double>(j) + 0.5) / 256.0;
      bool on_support = false;
      for (const Segment& seg : own.segments()) {
        if (x >= seg.lo - tol::kGeometry && x <= seg.hi + tol::kGeometry) on_support = true;
      }
      for (const Atom& a : own.atoms()) {
        if (std::abs(x - a.location) <= tol::kGeometry) on_support = true;
      }
      if (on_support) continue;
      double u = win_prob(x, opponents);
      worst_excess = std::max(worst_excess, u - (fit.slope * x + fit.intercept));
    }
    if (worst_excess > kAffineDominanceTol) player_ok = false;
    if (fit.intercept > kPositiveInterceptCut) ++positive_intercepts;

    out.details += strf("p%d: a=%.6g b=%.6g residual=%.3g off-support-excess=%.3g; ", i,
                        fit.slope, fit.intercept, fit.residual, worst_excess);
    if (!player_ok) out.pass = false;
  }

  if (positive_intercepts > 1) out.pass = false;
  out.details += strf("positive intercepts: %d", positive_intercepts);
  return out;
}

CheckResult check_atoms(const EquilibriumProfile& profile) {
  CheckResult out{"no_shared_interior_atoms", true, 0.0, 0.0, ""};
  std::vector<StructView> views = build_views(profile);
  const std::optional<double>& t = profile.game.threshold;
  int violations = 0;
  for (std::size_t i = 0; i < views.size(); ++i) {
    for (std::size_t j = i + 1; j < views.size(); ++j) {
      double loc_tol = std::max(views[i].atom_match_tol, views[j].atom_match_tol);
      for (double a : views[i].atoms) {
        for (double b : views[j].atoms) {
          if (std::abs(a - b) > loc_tol) continue;
          double x = 0.5 * (a + b);
          bool interior = x > loc_tol && (!t || x < *t - loc_tol);
          if (interior) {
            ++violations;
            out.details += strf("players %zu and %zu share an atom near %.6g; ", i, j, x);
          }
        }
      }
    }
  }
  out.residual = static_cast<double>(violations);
  out.pass = violations == 0;
  if (out.pass) out.details = "no interior bid is an atom of two players";
  return out;
}

CheckResult check_support_structure(const EquilibriumProfile& profile) {
  std::vector<StructView> views = build_views(profile);
  double gap_tol = tol::kGeometry;
  double start_tol = tol::kGeometry;
  double top_tol = tol::kGeometry;
  for (const StructView& v : views) {
    gap_tol = std::max(gap_tol, v.gap_tol);
    start_tol = std::max(start_tol, v.loc_tol);
    top_tol = std::max(top_tol, v.top_tol);
  }
  double common_top = reduced_top(views);
  CheckResult out{"support_structure", true, 0.0, gap_tol,
                  strf("L=%.6g; ", common_top)};

  std::vector<Piece> all_pieces;
  for (const StructView& v : views) {
    all_pieces.insert(all_pieces.end(), v.reduced.begin(), v.reduced.end());
  }
  std::vector<Piece> merged = merge_pieces(std::move(all_pieces), gap_tol);
  if (merged.empty()) {
    out.details += "no support at all; ";
    out.pass = false;
    return out;
  }
  if (merged.size() > 1 || merged.front().lo > start_tol ||
      merged.back().hi < common_top - top_tol) {
    out.pass = false;
    out.residual = std::max(out.residual, merged.front().lo);
    out.details += strf("union of supports is not one interval from 0 (components: %zu); ",
                        merged.size());
  }

  for (std::size_t i = 0; i < views.size(); ++i) {
    const StructView& v = views[i];
    std::vector<Piece> positive;
    for (const Piece& p : v.reduced) {
      if (p.hi > v.loc_tol) positive.push_back(p);
    }
    if (positive.empty()) continue;  // a pure mixer on {0, T} has nothing to cover
    std::vector<Piece> joined = merge_pieces(positive, v.gap_tol);
    if (joined.size() > 1) {
      out.pass = false;
      double gap = joined[1].lo - joined[0].hi;
      out.residual = std::max(out.residual, gap);
      out.details += strf("p%zu: positive support splits into %zu components; ", i,
                          joined.size());
    }
    if (joined.back().hi < common_top - v.top_tol) {
      out.pass = false;
      out.residual = std::max(out.residual, common_top - joined.back().hi);
      out.details += strf("p%zu: support tops out at %.6g, short of L=%.6g; ", i,
                          joined.back().hi, common_top);
    }
  }

  double eps = common_top / 100.0;
  for (std::size_t i = 0; i < views.size(); ++i) {
    const StructView& v = views[i];
    if (v.reduced.empty()) continue;  // pure threshold atom, outside this statement
    double lowest = v.reduced.front().lo;
    if (lowest > eps + v.loc_tol) {
      out.pass = false;
      out.residual = std::max(out.residual, lowest - eps);
      out.details += strf("p%zu: support starts at %.6g, beyond eps=%.6g; ", i, lowest, eps);
    }
  }

  if (common_top > 0.0) {
    double min_u = 1.0;
    for (std::size_t i = 0; i < views.size(); ++i) {
      std::vector<const Strategy*> opponents;
      for (std::size_t j = 0; j < views.size(); ++j) {
        if (j != i) opponents.push_back(&profile.strategies[j]);
      }
      for (int j = 1; j <= 100; ++j) {
        double x = common_top * static_cast<double>(j) / 100.0;
        min_u = std::min(min_u, win_prob(x, opponents));
      }
    }
    out.details += strf("min win prob on (0,L]: %.3g; ", min_u);
    if (!(min_u > 0.0)) {
      out.pass = false;
      out.details += "some positive bid never wins; ";
    }
  }
  if (out.pass) out.details += "ok";
  return out;
}

CheckResult check_budget_ordering(const EquilibriumProfile& profile) {
  std::vector<StructView> views = build_views(profile);
  const GameSpec& game = profile.game;
  const std::vector<int>& order = game.budget_order();
  double common_top = reduced_top(views);
  CheckResult out{"budget_ordering", true, 0.0, 0.0, ""};

  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    const StructView& hi = views[static_cast<std::size_t>(order[j])];
    const StructView& lo = views[static_cast<std::size_t>(order[j + 1])];
    if (!hi.has_beta || !lo.has_beta) continue;
    double slack = std::max(hi.loc_tol, lo.loc_tol);
    out.tolerance = std::max(out.tolerance, slack);
    if (hi.beta > lo.beta + slack) {
      out.pass = false;
      out.residual = std::max(out.residual, hi.beta - lo.beta);
      out.details += strf("entry points out of order: richer p%d starts at %.6g, poorer p%d "
                          "at %.6g; ",
                          order[j], hi.beta, order[j + 1], lo.beta);
    }
  }

  int top = order[0];
  const StructView& vt = views[static_cast<std::size_t>(top)];
  double zero_tol_top = vt.is_grid ? vt.dust : tol::kGeometry;
  bool strictly_richest =
      game.budgets[static_cast<std::size_t>(top)] > game.budgets[static_cast<std::size_t>(order[1])];
  if (strictly_richest) {
    if (vt.f_at_zero > zero_tol_top) {
      out.pass = false;
      out.residual = std::max(out.residual, vt.f_at_zero);
      out.details += strf("richest player holds %.3g mass at 0; ", vt.f_at_zero);
    }
    if (!vt.reduced.empty()) {
      std::vector<Piece> joined = merge_pieces(vt.reduced, vt.gap_tol);
      if (joined.size() > 1 || joined.front().lo > vt.loc_tol ||
          joined.back().hi < common_top - vt.top_tol) {
        out.pass = false;
        out.details += strf("richest player's support is not the interval [0, %.6g]; ",
                            common_top);
      }
    }
  }

  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    int i = order[idx];
    const StructView& v = views[static_cast<std::size_t>(i)];
    bool lower_budget = game.budgets[static_cast<std::size_t>(i)] <
                        game.budgets[static_cast<std::size_t>(top)];
    double zero_tol = v.is_grid ? v.dust : 0.0;
    if (lower_budget && !(v.f_at_zero > zero_tol)) {
      out.pass = false;
      out.details += strf("p%d has a smaller budget but no mass at 0 (F(0)=%.3g); ", i,
                          v.f_at_zero);
    }
  }

  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    const StructView& hi = views[static_cast<std::size_t>(order[j])];
    const StructView& lo = views[static_cast<std::size_t>(order[j + 1])];
    double slack = std::max({hi.is_grid ? hi.dust : 0.0, lo.is_grid ? lo.dust : 0.0, tol::kMass});
    if (hi.f_at_zero > lo.f_at_zero + slack) {
      out.pass = false;
      out.residual = std::max(out.residual, hi.f_at_zero - lo.f_at_zero);
      out.details += strf("mass at 0 increases with budget between p%d and p%d; ", order[j],
                          order[j + 1]);
    }
  }

  if (out.pass) out.details = "entry points and mass at 0 are ordered by budget";
  return out;
}

CheckResult check_bid_bound(const EquilibriumProfile& profile) {
  std::vector<StructView> views = build_views(profile);
  double bound = profile.game.default_bid_cap();
  double top = 0.0;
  double raw = 0.0;
  for (const StructView& v : views) {
    top = std::max(top, v.full_top);
    raw = std::max(raw, v.raw_top);
  }
  CheckResult out{"bid_bound", true, 0.0, tol::kGeometry, ""};
  out.residual = std::max(0.0, top - bound);
  out.pass = out.residual <= tol::kGeometry;
  out.details = strf("max support point %.6g (raw %.6g) vs bound %.6g", top, raw, bound);
  return out;
}

CheckResult check_epsilon_nash(const EquilibriumProfile& profile, int k_audit,
                               double tolerance_override) {
  if (k_audit < 1000) {
    throw std::invalid_argument("check_epsilon_nash: k_audit must be at least 1000");
  }
  double cap = profile.game.threshold
                   ? *profile.game.threshold
                   : std::max(profile.support_top, profile.game.max_budget());
  BidGrid audit(k_audit, cap);
  double expl = exploitability(profile, audit);
  double tolerance = tolerance_override > 0.0
                         ? tolerance_override
                         : (profile.regime == Regime::kGridSolved ? 1e-2 : 1e-3);
  CheckResult out{"epsilon_nash", expl <= tolerance, expl, tolerance,
                  strf("exploitability %.3g on audit grid k=%d cap=%.6g", expl, k_audit, cap)};
  double coarse_spacing = 0.0;
  double max_point_mass = 0.0;
  for (const Strategy& s : profile.strategies) {
    if (const auto* d = std::get_if<DiscreteStrategy>(&s)) {
      coarse_spacing = std::max(coarse_spacing, d->grid().spacing());
      for (double p : d->probs()) max_point_mass = std::max(max_point_mass, p);
    }
  }
  if (coarse_spacing > audit.spacing()) {
    out.details += strf("; profile was solved at spacing %.3g, so bids between its grid "
                        "points can gain up to roughly the per-point opponent mass "
                        "(max %.3g): audit exploitability at this resolution is "
                        "expected even near equilibrium",
                        coarse_spacing, max_point_mass);
  }
  return out;
}

CheckResult check_threshold_structure(const EquilibriumProfile& profile) {
  if (!profile.game.threshold) {
    throw std::invalid_argument("check_threshold_structure: threshold required");
  }
  double t = *profile.game.threshold;
  const GameSpec& game = profile.game;
  std::vector<StructView> views = build_views(profile);
  CheckResult out{"threshold_structure", true, 0.0, 0.0, ""};

  if (game.max_budget() >= t) {
    for (std::size_t i = 0; i < views.size(); ++i) {
      const Strategy& s = profile.strategies[i];
      const StructView& v = views[i];
      double zero_tol = v.is_grid ? v.dust : tol::kMass;
      if (game.budgets[i] >= t) {
        CdfValue at_t = strategy_eval(s, t);
        double atom_at_t = at_t.value - at_t.left_limit;
        if (std::abs(atom_at_t - 1.0) > (v.is_grid ? v.dust : tol::kMass)) {
          out.pass = false;
          out.residual = std::max(out.residual, 1.0 - atom_at_t);
          out.details += strf("p%zu can afford the threshold but bids it with mass %.6g; ", i,
                              atom_at_t);
        }
      } else {
        CdfValue at_zero = strategy_eval(s, 0.0);
        CdfValue at_t = strategy_eval(s, t);
        double off_mass = 1.0 - at_zero.value - (at_t.value - at_t.left_limit);
        if (off_mass > zero_tol) {
          out.pass = false;
          out.residual = std::max(out.residual, off_mass);
          out.details += strf("p%zu carries %.3g mass strictly between 0 and T; ", i, off_mass);
        }
      }
    }
    if (out.pass) out.details = "binding threshold: rich players bid T, the rest mix on {0, T}";
    return out;
  }

  int touching = 0;
  for (const StructView& v : views) touching += v.touches_threshold ? 1 : 0;
  if (touching == 1) {
    out.pass = false;
    out.residual = 1.0;
    out.details += "exactly one player reaches the threshold; ";
  }

  double lp = reduced_top(views);
  int reach_zero = 0;
  int no_mass_at_zero = 0;
  for (std::size_t i = 0; i < views.size(); ++i) {
    const StructView& v = views[i];
    std::vector<Piece> positive;
    for (const Piece& p : v.reduced) {
      if (p.hi > v.loc_tol) positive.push_back(p);
    }
    if (!positive.empty()) {
      std::vector<Piece> joined = merge_pieces(positive, v.gap_tol);
      if (joined.size() > 1) {
        out.pass = false;
        out.details += strf("p%zu: support between 0 and L' is not one interval; ", i);
      }
      if (joined.back().hi < lp - v.top_tol) {
        out.pass = false;
        out.residual = std::max(out.residual, lp - joined.back().hi);
        out.details += strf("p%zu: support ends at %.6g short of L'=%.6g; ", i,
                            joined.back().hi, lp);
      }
      if (joined.front().lo <= v.loc_tol) ++reach_zero;
    }
    double zero_tol = v.is_grid ? v.dust : tol::kMass;
    if (v.f_at_zero <= zero_tol) ++no_mass_at_zero;
  }
  if (lp > 0.0 && reach_zero < 2) {
    out.pass = false;
    out.details += strf("only %d player(s) bid arbitrarily low; ", reach_zero);
  }
  if (no_mass_at_zero < 1) {
    out.pass = false;
    out.details += "every player parks mass at 0; ";
  }
  out.details += strf("players touching T: %d; L'=%.6g", touching, lp);
  return out;
}

DiagnosticsReport run_applicable_checks(const EquilibriumProfile& profile, int k_audit) {
  DiagnosticsReport report;
  if (all_piecewise(profile)) {
    report.checks.push_back(check_affine_on_support(profile));
  }
  report.checks.push_back(check_atoms(profile));

  std::vector<StructView> views = build_views(profile);
  bool continuous_clears_threshold = true;
  if (profile.game.threshold) {
    for (const StructView& v : views) {
      if (v.continuous_top >= *profile.game.threshold - v.loc_tol) {
        continuous_clears_threshold = false;
      }
    }
  }
  if (continuous_clears_threshold) {
    report.checks.push_back(check_support_structure(profile));
  }
  report.checks.push_back(check_budget_ordering(profile));
  if (!profile.game.threshold || *profile.game.threshold > profile.game.default_bid_cap()) {
    report.checks.push_back(check_bid_bound(profile));
  }
  report.checks.push_back(check_epsilon_nash(profile, k_audit));
  if (profile.game.threshold) {
    report.checks.push_back(check_threshold_structure(profile));
  }
  return report;
}

}  // namespace lotto
