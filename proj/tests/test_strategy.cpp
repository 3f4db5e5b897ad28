#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "lotto/rng.hpp"
#include "lotto/strategy.hpp"

using lotto::Atom;
using lotto::BidGrid;
using lotto::DiscreteStrategy;
using lotto::PiecewiseCdf;
using lotto::Rng;
using lotto::Segment;

namespace {

PiecewiseCdf atom_plus_density() {
  // mass 1/2 at zero plus density 1/4 spread over [0, 2]
  return PiecewiseCdf({{0.0, 0.5}}, {{0.0, 2.0, 0.25}});
}

}  // namespace

TEST_CASE("cdf evaluation returns value and left limit") {
  PiecewiseCdf u = PiecewiseCdf::uniform(0.0, 2.0);
  CHECK(u.value(1.0) == 0.5);
  CHECK(u.left_value(1.0) == 0.5);
  CHECK(u.value(0.0) == 0.0);
  CHECK(u.value(2.0) == 1.0);
  CHECK(u.left_value(2.0) == 1.0);
  CHECK(u.value(5.0) == 1.0);

  PiecewiseCdf m = atom_plus_density();
  auto at_zero = m.eval(0.0);
  CHECK(at_zero.value == 0.5);
  CHECK(at_zero.left_limit == 0.0);
  auto at_top = m.eval(2.0);
  CHECK(at_top.value == 1.0);
  CHECK(at_top.left_limit == 1.0);
  CHECK(m.value(1.0) == doctest::Approx(0.75).epsilon(1e-15));

  CHECK_THROWS_AS(u.eval(-0.5), std::domain_error);
}

TEST_CASE("means are exact") {
  CHECK(PiecewiseCdf::uniform(0.0, 2.0).mean() == 1.0);
  CHECK(atom_plus_density().mean() == 0.5);
  CHECK(PiecewiseCdf::point_mass(2.0).mean() == 2.0);

  BidGrid grid(2, 2.0);
  DiscreteStrategy d(grid, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  CHECK(d.mean() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quantile is the generalized inverse cdf") {
  PiecewiseCdf p = PiecewiseCdf::point_mass(2.0);
  CHECK(p.quantile(0.0) == 2.0);
  CHECK(p.quantile(0.37) == 2.0);
  CHECK(p.quantile(1.0) == 2.0);

  PiecewiseCdf u = PiecewiseCdf::uniform(0.0, 2.0);
  CHECK(u.quantile(0.25) == doctest::Approx(0.5).epsilon(1e-15));

  PiecewiseCdf m = atom_plus_density();
  CHECK(m.quantile(0.75) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.quantile(0.5) == 0.0);   // atom at zero absorbs everything up to 1/2
  CHECK(m.quantile(0.25) == 0.0);
}

TEST_CASE("sampling a point mass is constant and seeds are reproducible") {
  PiecewiseCdf p = PiecewiseCdf::point_mass(2.0);
  Rng rng(7);
  for (int i = 0; i < 10; ++i) CHECK(p.sample(rng) == 2.0);

  PiecewiseCdf m = atom_plus_density();
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(m.sample(a) == m.sample(b));
}

TEST_CASE("construction rejects malformed distributions") {
  CHECK_THROWS_AS(PiecewiseCdf({{0.0, 0.5}}, {}), std::invalid_argument);  // mass 1/2
  CHECK_THROWS_AS(PiecewiseCdf({{0.0, 0.5}, {1.0, 0.6}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseCdf({{-1.0, 1.0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseCdf({{0.0, 0.0}, {1.0, 1.0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseCdf({{1.0, 0.5}, {1.0, 0.5}}, {}), std::invalid_argument);
  // overlapping segments
  CHECK_THROWS_AS(PiecewiseCdf({}, {{0.0, 1.0, 0.5}, {0.5, 1.5, 0.5}}), std::invalid_argument);
  // reversed segment
  CHECK_THROWS_AS(PiecewiseCdf({}, {{1.0, 0.5, 2.0}}), std::invalid_argument);
  // negative density
  CHECK_THROWS_AS(PiecewiseCdf({}, {{0.0, 1.0, -1.0}, {1.0, 2.0, 2.0}}), std::invalid_argument);
  // atom strictly inside a segment
  CHECK_THROWS_AS(PiecewiseCdf({{1.0, 0.5}}, {{0.0, 2.0, 0.25}}), std::invalid_argument);
  // atom at a segment endpoint is legal
  CHECK_NOTHROW(PiecewiseCdf({{2.0, 0.5}}, {{0.0, 2.0, 0.25}}));
}

TEST_CASE("cdf is nondecreasing and reaches one at the support top") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    PiecewiseCdf cdf = testutil::random_piecewise(rng, 2.0);
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      double x = 2.2 * static_cast<double>(i) / 1000.0;
      auto v = cdf.eval(x);
      CHECK(v.left_limit <= v.value + 1e-15);
      CHECK(prev <= v.value + 1e-15);
      prev = v.value;
    }
    CHECK(cdf.value(cdf.support_max()) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("support bounds come from atoms and positive-density pieces") {
  PiecewiseCdf m = atom_plus_density();
  CHECK(m.support_min() == 0.0);
  CHECK(m.support_max() == 2.0);
  PiecewiseCdf p = PiecewiseCdf::point_mass(1.5);
  CHECK(p.support_min() == 1.5);
  CHECK(p.support_max() == 1.5);
}

TEST_CASE("density lookup selects the covering segment") {
  PiecewiseCdf m = atom_plus_density();
  CHECK(m.density_at(1.0) == 0.25);
  CHECK(m.density_at(3.0) == 0.0);
  PiecewiseCdf two({}, {{0.0, 1.0, 0.25}, {1.0, 2.0, 0.75}});
  CHECK(two.density_at(0.5) == 0.25);
  CHECK(two.density_at(1.5) == 0.75);
  CHECK(two.density_at(1.0) == 0.75);  // right piece wins at the joint
}

TEST_CASE("breakpoints are sorted and deduplicated") {
  PiecewiseCdf m({{0.0, 0.5}, {2.0, 0.1}}, {{0.0, 1.0, 0.2}, {1.0, 2.0, 0.2}});
  auto b = m.breakpoints();
  REQUIRE(b.size() == 3);
  CHECK(b[0] == 0.0);
  CHECK(b[1] == 1.0);
  CHECK(b[2] == 2.0);
}

TEST_CASE("discretization concentrates a point mass on the last grid point") {
  BidGrid grid(3, 3.0);
  DiscreteStrategy d = discretize(PiecewiseCdf::point_mass(3.0), grid);
  CHECK(d.prob(0) == 0.0);
  CHECK(d.prob(1) == 0.0);
  CHECK(d.prob(2) == 0.0);
  CHECK(d.prob(3) == 1.0);
}

TEST_CASE("discretization splits uniform mass at cell midpoints") {
  BidGrid grid(2, 2.0);  // points 0, 1, 2; midpoints 0.5 and 1.5
  DiscreteStrategy u = discretize(PiecewiseCdf::uniform(0.0, 2.0), grid);
  CHECK(u.prob(0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(u.prob(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(u.prob(2) == doctest::Approx(0.25).epsilon(1e-15));

  DiscreteStrategy m = discretize(atom_plus_density(), grid);
  CHECK(m.prob(0) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(m.prob(1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(m.prob(2) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("an atom exactly on a midpoint moves to the lower grid point") {
  BidGrid grid(2, 2.0);
  DiscreteStrategy d = discretize(PiecewiseCdf::point_mass(0.5), grid);
  CHECK(d.prob(0) == 1.0);
  CHECK(d.prob(1) == 0.0);
}

TEST_CASE("discretization rejects support beyond the grid cap") {
  BidGrid grid(10, 1.0);
  CHECK_THROWS_AS(discretize(PiecewiseCdf::uniform(0.0, 2.0), grid), std::domain_error);
}

TEST_CASE("discretization moves the mean by at most one grid step") {
  Rng rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    PiecewiseCdf cdf = testutil::random_piecewise(rng, 2.0);
    for (int k : {2, 7, 50, 300}) {
      BidGrid grid(k, 2.0);
      DiscreteStrategy d = discretize(cdf, grid);
      CHECK(std::abs(d.mean() - cdf.mean()) <= grid.spacing() + 1e-12);
      double sum = 0.0;
      for (double p : d.probs()) sum += p;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("regridding a grid strategy is exact when grids match") {
  BidGrid grid(4, 2.0);
  DiscreteStrategy d(grid, {0.5, 0.0, 0.25, 0.0, 0.25});
  DiscreteStrategy same = discretize(d, grid);
  CHECK(same.probs() == d.probs());
  // coarsening: mass at 0.5 sits exactly on the midpoint of {0, 1}, goes down
  BidGrid coarse(2, 2.0);
  DiscreteStrategy c = discretize(d, coarse);
  CHECK(c.prob(0) == 0.5);
  CHECK(c.prob(1) == 0.25);
  CHECK(c.prob(2) == 0.25);
}

TEST_CASE("empirical cdf of one hundred thousand draws tracks the exact cdf") {
  PiecewiseCdf m = atom_plus_density();
  Rng rng(2024);
  const int n = 100000;
  std::vector<double> draws(n);
  for (auto& d : draws) d = m.sample(rng);
  std::sort(draws.begin(), draws.end());
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    double x = 2.0 * static_cast<double>(i) / 2000.0;
    auto it = std::upper_bound(draws.begin(), draws.end(), x);
    double empirical = static_cast<double>(it - draws.begin()) / n;
    worst = std::max(worst, std::abs(empirical - m.value(x)));
  }
  CHECK(worst <= 0.01);
}

TEST_CASE("grid strategies validate their probability vector") {
  BidGrid grid(2, 2.0);
  CHECK_THROWS_AS(DiscreteStrategy(grid, {0.5, 0.5}), std::invalid_argument);  // wrong length
  CHECK_THROWS_AS(DiscreteStrategy(grid, {0.5, 0.4, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteStrategy(grid, {-0.1, 0.6, 0.5}), std::invalid_argument);
  CHECK_NOTHROW(DiscreteStrategy(grid, {0.5, 0.25, 0.25}));
}

TEST_CASE("grid strategy evaluation, support and quantiles skip zero mass") {
  BidGrid grid(4, 2.0);
  DiscreteStrategy d(grid, {0.0, 0.5, 0.0, 0.0, 0.5});
  CHECK(d.support_min() == 0.5);
  CHECK(d.support_max() == 2.0);
  CHECK(d.eval(0.0).value == 0.0);
  CHECK(d.eval(0.5).value == 0.5);
  CHECK(d.eval(0.5).left_limit == 0.0);
  CHECK(d.eval(1.9).value == 0.5);
  CHECK(d.eval(2.0).value == 1.0);
  CHECK(d.quantile(0.3) == 0.5);
  CHECK(d.quantile(0.5) == 0.5);
  CHECK(d.quantile(0.51) == 2.0);
  CHECK(d.mean() == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("budget validation flags overspending strategies") {
  BidGrid grid(2, 2.0);
  DiscreteStrategy d(grid, {0.0, 0.0, 1.0});  // mean bid 2
  CHECK_NOTHROW(d.validate_budget(2.0));
  CHECK_NOTHROW(d.validate_budget(2.0 - 5e-10));  // inside the slack
  CHECK_THROWS_AS(d.validate_budget(1.5), std::invalid_argument);
}

TEST_CASE("grid strategies convert to atom-only exact form") {
  BidGrid grid(4, 2.0);
  DiscreteStrategy d(grid, {0.5, 0.0, 0.25, 0.0, 0.25});
  PiecewiseCdf p = to_piecewise(d);
  REQUIRE(p.atoms().size() == 3);
  CHECK(p.atoms()[0].location == 0.0);
  CHECK(p.atoms()[0].mass == 0.5);
  CHECK(p.atoms()[1].location == 1.0);
  CHECK(p.atoms()[2].location == 2.0);
  CHECK(p.segments().empty());
  for (double x : {0.0, 0.3, 1.0, 1.7, 2.0}) {
    CHECK(p.value(x) == d.eval(x).value);
    CHECK(p.left_value(x) == d.eval(x).left_limit);
  }
}
