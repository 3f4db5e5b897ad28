#include "lotto/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lotto/strutil.hpp"

namespace lotto {

namespace {

constexpr const char* kCsvHeader = "player_index,kind,x_or_lo,hi_or_empty,mass_or_density";

double parse_number(const std::string& field, const char* what) {
  const char* begin = field.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument(strf("csv: bad %s value '%s'", what, field.c_str()));
  }
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

SolveConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  if (!j.contains("budgets") || !j["budgets"].is_array()) {
    throw std::invalid_argument("config: 'budgets' must be an array of positive numbers");
  }
  std::vector<double> budgets;
  for (const auto& b : j["budgets"]) {
    if (!b.is_number()) {
      throw std::invalid_argument("config: 'budgets' must contain numbers only");
    }
    budgets.push_back(b.get<double>());
  }
  std::optional<double> threshold;
  if (j.contains("threshold") && !j["threshold"].is_null()) {
    if (!j["threshold"].is_number()) {
      throw std::invalid_argument("config: 'threshold' must be a number or null");
    }
    threshold = j["threshold"].get<double>();
  }
  SolveConfig config{GameSpec(std::move(budgets), threshold), kDefaultGridK};
  if (j.contains("grid_k")) {
    if (!j["grid_k"].is_number_integer() || j["grid_k"].get<int>() < 1) {
      throw std::invalid_argument("config: 'grid_k' must be a positive integer");
    }
    config.grid_k = j["grid_k"].get<int>();
  }
  return config;
}

SolveConfig load_config(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(strf("config %s: %s", path.c_str(), e.what()));
  }
  return parse_config(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument(strf("cannot open %s for reading", path.c_str()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(strf("cannot open %s for writing", path.c_str()));
  out << text;
  if (!out) throw std::runtime_error(strf("write to %s failed", path.c_str()));
}

std::string strategies_to_csv(const std::vector<Strategy>& strategies) {
  bool all_same_grid = !strategies.empty();
  const BidGrid* grid = nullptr;
  for (const Strategy& s : strategies) {
    const auto* d = std::get_if<DiscreteStrategy>(&s);
    if (!d || (grid && d->grid() != *grid)) {
      all_same_grid = false;
      break;
    }
    grid = &d->grid();
  }

  std::string out;
  if (all_same_grid) {
    out += strf("# grid k=%d cap=%.17g\n", grid->resolution(), grid->cap());
  }
  out += kCsvHeader;
  out += '\n';
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (const auto* cdf = std::get_if<PiecewiseCdf>(&strategies[i])) {
      for (const Atom& a : cdf->atoms()) {
        out += strf("%zu,atom,%.17g,,%.17g\n", i, a.location, a.mass);
      }
      for (const Segment& seg : cdf->segments()) {
        out += strf("%zu,segment,%.17g,%.17g,%.17g\n", i, seg.lo, seg.hi, seg.density);
      }
    } else {
      const auto& d = std::get<DiscreteStrategy>(strategies[i]);
      for (int l = 0; l < d.grid().size(); ++l) {
        double p = d.prob(l);
        if (p > 0.0) out += strf("%zu,atom,%.17g,,%.17g\n", i, d.grid().point(l), p);
      }
    }
  }
  return out;
}

std::vector<Strategy> strategies_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  bool have_grid = false;
  int grid_k = 0;
  double grid_cap = 0.0;

  struct Rows {
    std::vector<Atom> atoms;
    std::vector<Segment> segments;
  };
  std::vector<Rows> players;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      int k = 0;
      double cap = 0.0;
      if (std::sscanf(line.c_str(), "# grid k=%d cap=%lf", &k, &cap) == 2) {
        have_grid = true;
        grid_k = k;
        grid_cap = cap;
      }
      continue;
    }
    if (!saw_header) {
      if (line != kCsvHeader) {
        throw std::invalid_argument(strf("csv: expected header '%s'", kCsvHeader));
      }
      saw_header = true;
      continue;
    }
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 5) {
      throw std::invalid_argument(strf("csv: expected 5 fields, got %zu in '%s'",
                                       fields.size(), line.c_str()));
    }
    long idx = std::strtol(fields[0].c_str(), nullptr, 10);
    if (idx < 0 || fields[0].empty()) {
      throw std::invalid_argument(strf("csv: bad player_index '%s'", fields[0].c_str()));
    }
    if (players.size() <= static_cast<std::size_t>(idx)) {
      players.resize(static_cast<std::size_t>(idx) + 1);
    }
    Rows& rows = players[static_cast<std::size_t>(idx)];
    if (fields[1] == "atom") {
      if (!fields[3].empty()) {
        throw std::invalid_argument("csv: atom rows must leave hi_or_empty blank");
      }
      rows.atoms.push_back({parse_number(fields[2], "x_or_lo"),
                            parse_number(fields[4], "mass_or_density")});
    } else if (fields[1] == "segment") {
      rows.segments.push_back({parse_number(fields[2], "x_or_lo"),
                               parse_number(fields[3], "hi_or_empty"),
                               parse_number(fields[4], "mass_or_density")});
    } else {
      throw std::invalid_argument(strf("csv: unknown kind '%s'", fields[1].c_str()));
    }
  }
  if (!saw_header) throw std::invalid_argument("csv: missing header line");
  if (players.empty()) throw std::invalid_argument("csv: no strategy rows");

  std::vector<Strategy> out;
  if (have_grid) {
    BidGrid grid(grid_k, grid_cap);
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (!players[i].segments.empty()) {
        throw std::invalid_argument("csv: grid strategies must contain atom rows only");
      }
      std::vector<double> probs(static_cast<std::size_t>(grid.size()), 0.0);
      for (const Atom& a : players[i].atoms) {
        probs[static_cast<std::size_t>(grid.nearest_index(a.location))] += a.mass;
      }
      out.push_back(DiscreteStrategy(grid, std::move(probs)));
    }
    return out;
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    Rows& rows = players[i];
    if (rows.atoms.empty() && rows.segments.empty()) {
      throw std::invalid_argument(strf("csv: player %zu has no rows", i));
    }
    std::sort(rows.atoms.begin(), rows.atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    std::sort(rows.segments.begin(), rows.segments.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    out.push_back(PiecewiseCdf(std::move(rows.atoms), std::move(rows.segments)));
  }
  return out;
}

EquilibriumProfile profile_from_csv(const std::string& text, const GameSpec& game) {
  std::vector<Strategy> strategies = strategies_from_csv(text);
  bool any_grid = false;
  for (const Strategy& s : strategies) {
    if (std::holds_alternative<DiscreteStrategy>(s)) any_grid = true;
  }
  Regime regime = Regime::kGridSolved;
  if (!any_grid) {
    double max_budget = game.max_budget();
    if (game.threshold && *game.threshold <= max_budget) {
      regime = Regime::kDegenerateThreshold;
    } else if (game.num_players() == 2) {
      double t = game.threshold.value_or(game.default_bid_cap());
      regime = max_budget <= 0.5 * t ? Regime::kTwoPlayerLowBudget
                                     : Regime::kTwoPlayerMidBudget;
    }
  }
  double top = 0.0;
  for (const Strategy& s : strategies) top = std::max(top, strategy_support_max(s));
  return EquilibriumProfile(game, std::move(strategies), regime, top, {});
}

nlohmann::json profile_to_json(const EquilibriumProfile& profile) {
  nlohmann::json j;
  j["budgets"] = profile.game.budgets;
  if (profile.game.threshold) {
    j["threshold"] = *profile.game.threshold;
  } else {
    j["threshold"] = nullptr;
  }
  j["regime"] = regime_name(profile.regime);
  j["support_top"] = profile.support_top;
  nlohmann::json players = nlohmann::json::array();
  for (const Strategy& s : profile.strategies) {
    nlohmann::json p;
    if (const auto* cdf = std::get_if<PiecewiseCdf>(&s)) {
      p["kind"] = "piecewise";
      nlohmann::json atoms = nlohmann::json::array();
      for (const Atom& a : cdf->atoms()) {
        atoms.push_back({{"x", a.location}, {"mass", a.mass}});
      }
      nlohmann::json segments = nlohmann::json::array();
      for (const Segment& seg : cdf->segments()) {
        segments.push_back({{"lo", seg.lo}, {"hi", seg.hi}, {"density", seg.density}});
      }
      p["atoms"] = std::move(atoms);
      p["segments"] = std::move(segments);
    } else {
      const auto& d = std::get<DiscreteStrategy>(s);
      p["kind"] = "grid";
      p["k"] = d.grid().resolution();
      p["cap"] = d.grid().cap();
      p["probs"] = d.probs();
    }
    p["mean"] = strategy_mean(s);
    players.push_back(std::move(p));
  }
  j["players"] = std::move(players);
  if (!profile.affine.empty()) {
    nlohmann::json affine = nlohmann::json::array();
    for (const auto& entry : profile.affine) {
      if (entry) {
        affine.push_back({{"slope", entry->slope}, {"intercept", entry->intercept}});
      } else {
        affine.push_back(nullptr);
      }
    }
    j["utility_lines"] = std::move(affine);
  }
  return j;
}

nlohmann::json report_to_json(const SolveReport& report) {
  nlohmann::json j;
  j["regime"] = regime_name(report.profile.regime);
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  j["exploitability"] = report.exploitability;
  j["expected_bids"] = report.expected_bids;
  j["budget_slack"] = report.budget_slack;
  j["support_top"] = report.profile.support_top;
  nlohmann::json checkpoints = nlohmann::json::array();
  for (std::size_t i = 0; i < report.checkpoints.size(); ++i) {
    checkpoints.push_back({{"iteration", static_cast<int>(i) * 100},
                           {"exploitability", report.checkpoints[i]}});
  }
  j["checkpoints"] = std::move(checkpoints);
  return j;
}

nlohmann::json diagnostics_to_json(const DiagnosticsReport& report) {
  nlohmann::json j;
  j["overall"] = report.overall();
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"details", c.details}});
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace lotto
