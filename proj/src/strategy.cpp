#include "lotto/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lotto {

namespace {

// Unified event stream for quantile lookups: an atom is a zero-width event.
struct MassEvent {
  double lo = 0.0;
  double hi = 0.0;
  double mass = 0.0;
  double density = 0.0;
  double cum_before = 0.0;
  bool is_atom = false;
};

std::vector<MassEvent> merge_events(const std::vector<Atom>& atoms,
                                    const std::vector<Segment>& segments) {
  std::vector<MassEvent> events;
  events.reserve(atoms.size() + segments.size());
  std::size_t ia = 0;
  std::size_t is = 0;
  double cum = 0.0;
  auto push_atom = [&](const Atom& a) {
    events.push_back({a.location, a.location, a.mass, 0.0, cum, true});
    cum += a.mass;
  };
  auto push_segment = [&](const Segment& s) {
    double m = s.density * (s.hi - s.lo);
    events.push_back({s.lo, s.hi, m, s.density, cum, false});
    cum += m;
  };
  while (ia < atoms.size() || is < segments.size()) {
    // An atom at a segment's lower endpoint jumps first, then density accrues.
    bool take_atom = is == segments.size() ||
                     (ia < atoms.size() && atoms[ia].location <= segments[is].lo);
    if (take_atom) {
      push_atom(atoms[ia++]);
    } else {
      push_segment(segments[is++]);
    }
  }
  return events;
}

}  // namespace

PiecewiseCdf::PiecewiseCdf(std::vector<Atom> atoms, std::vector<Segment> segments)
    : atoms_(std::move(atoms)), segments_(std::move(segments)) {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  std::sort(segments_.begin(), segments_.end(),
            [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  if (atoms_.empty() && segments_.empty()) {
    throw std::invalid_argument("PiecewiseCdf: no atoms or segments");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!std::isfinite(a.location) || a.location < 0.0) {
      throw std::invalid_argument("PiecewiseCdf: atom location must be finite and nonnegative");
    }
    if (!(a.mass > 0.0) || a.mass > 1.0 + tol::kMass) {
      throw std::invalid_argument("PiecewiseCdf: atom mass must lie in (0, 1]");
    }
    if (i > 0 && !(atoms_[i - 1].location < a.location)) {
      throw std::invalid_argument("PiecewiseCdf: duplicate atom location");
    }
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || s.lo < 0.0 || !(s.lo < s.hi)) {
      throw std::invalid_argument("PiecewiseCdf: segment must satisfy 0 <= lo < hi");
    }
    if (!(s.density >= 0.0) || !std::isfinite(s.density)) {
      throw std::invalid_argument("PiecewiseCdf: segment density must be nonnegative");
    }
    if (i > 0 && segments_[i - 1].hi > s.lo) {
      throw std::invalid_argument("PiecewiseCdf: segments must be disjoint");
    }
  }
  for (const Atom& a : atoms_) {
    for (const Segment& s : segments_) {
      if (s.lo < a.location && a.location < s.hi) {
        throw std::invalid_argument("PiecewiseCdf: atom strictly inside a segment");
      }
    }
  }
  atom_cum_.resize(atoms_.size() + 1, 0.0);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    atom_cum_[i + 1] = atom_cum_[i] + atoms_[i].mass;
  }
  seg_cum_.resize(segments_.size() + 1, 0.0);
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    seg_cum_[i + 1] = seg_cum_[i] + segments_[i].density * (segments_[i].hi - segments_[i].lo);
  }
  double total = atom_cum_.back() + seg_cum_.back();
  if (std::abs(total - 1.0) > tol::kMass) {
    throw std::invalid_argument("PiecewiseCdf: total mass must equal 1");
  }
}

PiecewiseCdf PiecewiseCdf::point_mass(double x) {
  return PiecewiseCdf({{x, 1.0}}, {});
}

PiecewiseCdf PiecewiseCdf::uniform(double lo, double hi) {
  return PiecewiseCdf({}, {{lo, hi, 1.0 / (hi - lo)}});
}

CdfValue PiecewiseCdf::eval(double x) const {
  if (!(x >= 0.0)) {
    throw std::domain_error("PiecewiseCdf::eval: bids are nonnegative");
  }
  // The continuous part has no jumps, so it contributes equally to both limits.
  double seg_mass = 0.0;
  {
    auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                               [](double v, const Segment& s) { return v < s.lo; });
    std::size_t j = static_cast<std::size_t>(it - segments_.begin());
    if (j > 0) {
      const Segment& s = segments_[j - 1];
      seg_mass = x >= s.hi ? seg_cum_[j] : seg_cum_[j - 1] + s.density * (x - s.lo);
    }
  }
  auto at_or_below = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                      [](double v, const Atom& a) { return v < a.location; });
  auto below = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                [](const Atom& a, double v) { return a.location < v; });
  CdfValue out;
  out.value = atom_cum_[static_cast<std::size_t>(at_or_below - atoms_.begin())] + seg_mass;
  out.left_limit = atom_cum_[static_cast<std::size_t>(below - atoms_.begin())] + seg_mass;
  return out;
}

double PiecewiseCdf::density_at(double x) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                             [](double v, const Segment& s) { return v < s.lo; });
  if (it == segments_.begin()) return 0.0;
  const Segment& s = *(it - 1);
  return x < s.hi ? s.density : 0.0;
}

double PiecewiseCdf::mean() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.mass * a.location;
  for (const Segment& s : segments_) m += s.density * (s.hi * s.hi - s.lo * s.lo) * 0.5;
  return m;
}

double PiecewiseCdf::support_min() const {
  double lo = std::numeric_limits<double>::infinity();
  if (!atoms_.empty()) lo = std::min(lo, atoms_.front().location);
  if (!segments_.empty()) lo = std::min(lo, segments_.front().lo);
  return lo;
}

double PiecewiseCdf::support_max() const {
  double hi = 0.0;
  if (!atoms_.empty()) hi = std::max(hi, atoms_.back().location);
  if (!segments_.empty()) hi = std::max(hi, segments_.back().hi);
  return hi;
}

double PiecewiseCdf::quantile(double u) const {
  if (!(u >= 0.0) || u > 1.0) {
    throw std::domain_error("PiecewiseCdf::quantile: u must lie in [0, 1]");
  }
  std::vector<MassEvent> events = merge_events(atoms_, segments_);
  auto it = std::partition_point(events.begin(), events.end(), [u](const MassEvent& e) {
    return e.cum_before + e.mass < u;
  });
  if (it == events.end()) return support_max();
  if (it->is_atom || !(it->density > 0.0)) return it->lo;
  return std::min(it->lo + (u - it->cum_before) / it->density, it->hi);
}

std::vector<double> PiecewiseCdf::breakpoints() const {
  std::vector<double> pts;
  pts.reserve(atoms_.size() + 2 * segments_.size());
  for (const Atom& a : atoms_) pts.push_back(a.location);
  for (const Segment& s : segments_) {
    pts.push_back(s.lo);
    pts.push_back(s.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

DiscreteStrategy::DiscreteStrategy(BidGrid grid, std::vector<double> probs)
    : grid_(grid), probs_(std::move(probs)) {
  if (probs_.size() != static_cast<std::size_t>(grid_.size())) {
    throw std::invalid_argument("DiscreteStrategy: one probability per grid point required");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("DiscreteStrategy: probabilities must be nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol::kMass) {
    throw std::invalid_argument("DiscreteStrategy: probabilities must sum to 1");
  }
  cum_.resize(probs_.size() + 1, 0.0);
  for (std::size_t l = 0; l < probs_.size(); ++l) cum_[l + 1] = cum_[l] + probs_[l];
}

CdfValue DiscreteStrategy::eval(double x) const {
  if (!(x >= 0.0)) {
    throw std::domain_error("DiscreteStrategy::eval: bids are nonnegative");
  }
  const std::vector<double>& pts = grid_.points();
  auto at_or_below = std::upper_bound(pts.begin(), pts.end(), x);
  auto below = std::lower_bound(pts.begin(), pts.end(), x);
  return {cum_[static_cast<std::size_t>(at_or_below - pts.begin())],
          cum_[static_cast<std::size_t>(below - pts.begin())]};
}

double DiscreteStrategy::mean() const {
  double m = 0.0;
  for (std::size_t l = 0; l < probs_.size(); ++l) m += probs_[l] * grid_.point(static_cast<int>(l));
  return m;
}

double DiscreteStrategy::support_min() const {
  for (std::size_t l = 0; l < probs_.size(); ++l) {
    if (probs_[l] > 0.0) return grid_.point(static_cast<int>(l));
  }
  return 0.0;
}

double DiscreteStrategy::support_max() const {
  for (std::size_t l = probs_.size(); l-- > 0;) {
    if (probs_[l] > 0.0) return grid_.point(static_cast<int>(l));
  }
  return 0.0;
}

double DiscreteStrategy::quantile(double u) const {
  if (!(u >= 0.0) || u > 1.0) {
    throw std::domain_error("DiscreteStrategy::quantile: u must lie in [0, 1]");
  }
  auto it = std::partition_point(cum_.begin() + 1, cum_.end(), [u](double c) { return c < u; });
  if (it == cum_.end()) return support_max();
  std::size_t l = static_cast<std::size_t>(it - cum_.begin()) - 1;
  while (l + 1 < probs_.size() && probs_[l] == 0.0) ++l;  // u == 0 lands before the support
  return grid_.point(static_cast<int>(l));
}

void DiscreteStrategy::validate_budget(double budget) const {
  if (mean() > budget + tol::kBudget) {
    throw std::invalid_argument("DiscreteStrategy: expected bid exceeds the budget");
  }
}

CdfValue strategy_eval(const Strategy& s, double x) {
  return std::visit([x](const auto& v) { return v.eval(x); }, s);
}

double strategy_mean(const Strategy& s) {
  return std::visit([](const auto& v) { return v.mean(); }, s);
}

double strategy_support_min(const Strategy& s) {
  return std::visit([](const auto& v) { return v.support_min(); }, s);
}

double strategy_support_max(const Strategy& s) {
  return std::visit([](const auto& v) { return v.support_max(); }, s);
}

double strategy_sample(const Strategy& s, Rng& rng) {
  return std::visit([&rng](const auto& v) { return v.sample(rng); }, s);
}

std::vector<double> strategy_breakpoints(const Strategy& s) {
  if (const auto* cdf = std::get_if<PiecewiseCdf>(&s)) return cdf->breakpoints();
  const auto& d = std::get<DiscreteStrategy>(s);
  std::vector<double> pts;
  for (std::size_t l = 0; l < d.probs().size(); ++l) {
    if (d.probs()[l] > 0.0) pts.push_back(d.grid().point(static_cast<int>(l)));
  }
  return pts;
}

double strategy_density_at(const Strategy& s, double x) {
  if (const auto* cdf = std::get_if<PiecewiseCdf>(&s)) return cdf->density_at(x);
  return 0.0;
}

DiscreteStrategy discretize(const PiecewiseCdf& cdf, const BidGrid& grid) {
  if (cdf.support_max() > grid.cap() + tol::kGeometry) {
    throw std::domain_error("discretize: support extends beyond the grid cap");
  }
  int k = grid.resolution();
  if (cdf.segments().empty()) {
    // Atom-only input: move each mass to its nearest point directly. This is
    // the midpoint rule without the cdf differencing, so masses already on
    // grid points survive bit-exactly.
    std::vector<double> probs(static_cast<std::size_t>(k) + 1, 0.0);
    for (const Atom& a : cdf.atoms()) {
      probs[static_cast<std::size_t>(grid.nearest_index(a.location))] += a.mass;
    }
    return DiscreteStrategy(grid, std::move(probs));
  }
  std::vector<double> probs(static_cast<std::size_t>(k) + 1, 0.0);
  double prev = 0.0;
  for (int l = 0; l < k; ++l) {
    double mid = 0.5 * (grid.point(l) + grid.point(l + 1));
    double c = cdf.value(mid);
    probs[static_cast<std::size_t>(l)] = std::max(c - prev, 0.0);
    prev = c;
  }
  probs[static_cast<std::size_t>(k)] = std::max(1.0 - prev, 0.0);
  return DiscreteStrategy(grid, std::move(probs));
}

DiscreteStrategy discretize(const DiscreteStrategy& s, const BidGrid& grid) {
  if (s.grid() == grid) return s;
  if (s.support_max() > grid.cap() + tol::kGeometry) {
    throw std::domain_error("discretize: support extends beyond the grid cap");
  }
  std::vector<double> probs(static_cast<std::size_t>(grid.size()), 0.0);
  for (std::size_t l = 0; l < s.probs().size(); ++l) {
    double p = s.probs()[l];
    if (p > 0.0) {
      probs[static_cast<std::size_t>(grid.nearest_index(s.grid().point(static_cast<int>(l))))] += p;
    }
  }
  return DiscreteStrategy(grid, std::move(probs));
}

DiscreteStrategy discretize(const Strategy& s, const BidGrid& grid) {
  return std::visit([&grid](const auto& v) { return discretize(v, grid); }, s);
}

PiecewiseCdf to_piecewise(const DiscreteStrategy& s) {
  std::vector<Atom> atoms;
  for (std::size_t l = 0; l < s.probs().size(); ++l) {
    if (s.probs()[l] > 0.0) atoms.push_back({s.grid().point(static_cast<int>(l)), s.probs()[l]});
  }
  return PiecewiseCdf(std::move(atoms), {});
}

}  // namespace lotto
