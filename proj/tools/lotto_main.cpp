#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "lotto/closed_form.hpp"
#include "lotto/io.hpp"
#include "lotto/simulate.hpp"
#include "lotto/solver.hpp"
#include "lotto/strutil.hpp"
#include "lotto/verifier.hpp"

namespace {

enum LogLevel { kLogError = 0, kLogInfo = 1, kLogDebug = 2 };
int g_log_level = kLogInfo;

void init_log_level() {
  const char* env = std::getenv("LOTTO_LOG_LEVEL");
  if (!env) return;
  if (std::strcmp(env, "error") == 0) {
    g_log_level = kLogError;
  } else if (std::strcmp(env, "info") == 0) {
    g_log_level = kLogInfo;
  } else if (std::strcmp(env, "debug") == 0) {
    g_log_level = kLogDebug;
  } else {
    std::fprintf(stderr, "[error] unknown LOTTO_LOG_LEVEL '%s' (want error|info|debug)\n", env);
  }
}

__attribute__((format(printf, 2, 3))) void logf(int level, const char* fmt, ...) {
  if (level > g_log_level) return;
  const char* tag = level == kLogError ? "error" : (level == kLogInfo ? "info" : "debug");
  std::fprintf(stderr, "[%s] ", tag);
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fprintf(stderr, "\n");
}

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lotto::GameSpec synthetic_game(const std::vector<lotto::Strategy>& strategies) {
  std::vector<double> budgets;
  for (const lotto::Strategy& s : strategies) {
    budgets.push_back(lotto::strategy_mean(s) + 1.0);
  }
  return lotto::GameSpec(std::move(budgets), std::nullopt);
}

lotto::EquilibriumProfile load_profile(const std::string& profile_path,
                                       const std::string& game_path) {
  std::string text = lotto::read_text_file(profile_path);
  if (!game_path.empty()) {
    return lotto::profile_from_csv(text, lotto::load_config(game_path).game);
  }
  std::vector<lotto::Strategy> strategies = lotto::strategies_from_csv(text);
  lotto::GameSpec game = synthetic_game(strategies);
  double top = 0.0;
  for (const lotto::Strategy& s : strategies) {
    top = std::max(top, lotto::strategy_support_max(s));
  }
  return lotto::EquilibriumProfile(game, std::move(strategies), lotto::Regime::kGridSolved,
                                   top, {});
}

std::string cdf_samples_csv(const lotto::EquilibriumProfile& profile) {
  double top = profile.game.threshold.value_or(profile.support_top);
  if (top <= 0.0) top = 1.0;
  std::string out = "x";
  for (int i = 0; i < profile.num_players(); ++i) out += lotto::strf(",F%d", i);
  out += '\n';
  for (int row = 0; row <= 400; ++row) {
    double x = top * static_cast<double>(row) / 400.0;
    out += lotto::strf("%.10g", x);
    for (const lotto::Strategy& s : profile.strategies) {
      out += lotto::strf(",%.10g", lotto::strategy_eval(s, x).value);
    }
    out += '\n';
  }
  return out;
}

void write_solve_outputs(const std::string& out_dir, const lotto::SolveReport& report,
                         const nlohmann::json& extra) {
  std::filesystem::create_directories(out_dir);
  nlohmann::json j = lotto::report_to_json(report);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  lotto::write_text_file(out_dir + "/report.json", j.dump(2) + "\n");
  lotto::write_text_file(out_dir + "/strategy.csv",
                         lotto::strategies_to_csv(report.profile.strategies));
  lotto::write_text_file(out_dir + "/cdf.csv", cdf_samples_csv(report.profile));
  logf(kLogInfo, "wrote %s/report.json, strategy.csv, cdf.csv", out_dir.c_str());
}

lotto::SolveReport closed_form_report(const lotto::EquilibriumProfile& profile) {
  lotto::SolveReport report{profile, 0, true, 0.0, {}, {}, {}};
  const lotto::GameSpec& game = profile.game;
  double cap = game.threshold.value_or(std::max(profile.support_top, game.max_budget()));
  report.exploitability = lotto::exploitability(profile, lotto::BidGrid(10000, cap));
  for (int i = 0; i < profile.num_players(); ++i) {
    double mean = lotto::strategy_mean(profile.strategies[static_cast<std::size_t>(i)]);
    report.expected_bids.push_back(mean);
    report.budget_slack.push_back(game.budgets[static_cast<std::size_t>(i)] - mean);
  }
  return report;
}

int cmd_solve(const std::string& config_path, const std::string& method, int grid_k_flag,
              double eps, int max_iters, const std::string& out_dir) {
  lotto::SolveConfig config = lotto::load_config(config_path);
  const lotto::GameSpec& game = config.game;
  int k = grid_k_flag > 0 ? grid_k_flag : config.grid_k;

  if (method == "fictitious-play") {
    double cap = game.threshold.value_or(game.default_bid_cap());
    lotto::BidGrid grid(k, cap);
    logf(kLogInfo, "fictitious play on k=%d cap=%.6g, eps=%.3g, max %d rounds", k, cap, eps,
         max_iters);
    lotto::SolveReport report = lotto::fictitious_play(game, grid, max_iters, eps);
    nlohmann::json extra{{"method", method}, {"grid_k", k}, {"grid_cap", cap}};
    write_solve_outputs(out_dir, report, extra);
    std::printf("regime: %s\n", lotto::regime_name(report.profile.regime).c_str());
    std::printf("iterations: %d (%s)\n", report.iterations,
                report.converged ? "converged" : "not converged");
    std::printf("exploitability: %.6g\n", report.exploitability);
    if (!report.converged) {
      logf(kLogError, "did not reach eps=%.3g within %d rounds", eps, max_iters);
      return kRuntimeError;
    }
    return 0;
  }

  std::optional<lotto::EquilibriumProfile> profile;
  nlohmann::json extra{{"method", method}};
  if (method == "degenerate") {
    try {
      profile = lotto::solve_degenerate_threshold(game);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  } else {  // closed-form
    bool degenerate_applies = game.threshold && *game.threshold <= game.max_budget();
    if (game.num_players() == 2) {
      lotto::TwoPlayerSolution sol = lotto::solve_two_player(game);
      profile = sol.profile;
      extra["support_break"] = sol.support_break;
      extra["f2_at_zero"] = sol.f2_at_zero;
      extra["f1_at_break"] = sol.f1_at_break;
      extra["f2_at_break"] = sol.f2_at_break;
      extra["atom_mass_at_cap"] = {sol.atom_mass_at_cap_1, sol.atom_mass_at_cap_2};
    } else if (degenerate_applies) {
      profile = lotto::solve_degenerate_threshold(game);
    } else {
      throw UsageError("closed-form solutions cover two-player games and games whose "
                       "threshold is at most the largest budget; use fictitious-play");
    }
  }
  lotto::SolveReport report = closed_form_report(*profile);
  write_solve_outputs(out_dir, report, extra);
  std::printf("regime: %s\n", lotto::regime_name(report.profile.regime).c_str());
  std::printf("support top: %.6g\n", report.profile.support_top);
  std::printf("exploitability (audit k=10000): %.6g\n", report.exploitability);
  return 0;
}

int cmd_verify(const std::string& profile_path, const std::string& game_path, int k_audit,
               const std::string& out_path) {
  lotto::EquilibriumProfile profile = load_profile(profile_path, game_path);
  lotto::DiagnosticsReport report = lotto::run_applicable_checks(profile, k_audit);
  for (const lotto::CheckResult& c : report.checks) {
    std::printf("[%s] %-26s residual=%-12.4g tol=%-12.4g %s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.residual, c.tolerance, c.details.c_str());
  }
  nlohmann::json j = lotto::diagnostics_to_json(report);
  if (!out_path.empty()) {
    lotto::write_text_file(out_path, j.dump(2) + "\n");
    logf(kLogInfo, "wrote %s", out_path.c_str());
  } else {
    std::printf("%s\n", j.dump(2).c_str());
  }
  return report.overall() ? 0 : kRuntimeError;
}

int cmd_simulate(const std::string& profile_path, const std::string& game_path,
                 long long samples, std::uint64_t seed) {
  lotto::EquilibriumProfile profile = load_profile(profile_path, game_path);
  lotto::SimulationResult result = lotto::simulate(profile, samples, seed);
  nlohmann::json j{{"samples", result.samples},   {"seed", result.seed},
                   {"win_share", result.win_share}, {"win_share_se", result.win_share_se},
                   {"mean_bid", result.mean_bid},   {"mean_bid_se", result.mean_bid_se}};
  std::printf("%s\n", j.dump(2).c_str());
  return 0;
}

int cmd_export(const std::string& profile_path, const std::string& game_path,
               const std::string& format, const std::string& out_path) {
  lotto::EquilibriumProfile profile = load_profile(profile_path, game_path);
  std::string text = format == "csv" ? lotto::strategies_to_csv(profile.strategies)
                                     : lotto::profile_to_json(profile).dump(2) + "\n";
  if (!out_path.empty()) {
    lotto::write_text_file(out_path, text);
    logf(kLogInfo, "wrote %s", out_path.c_str());
  } else {
    std::fputs(text.c_str(), stdout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  init_log_level();
  CLI::App app{"General Lotto equilibrium toolkit: closed forms, fictitious play, "
               "equilibrium diagnostics, and Monte Carlo replay"};
  app.require_subcommand(1);

  std::string config_path, method = "closed-form", out_dir;
  int grid_k = 0, max_iters = lotto::kDefaultMaxIters;
  double eps = lotto::kDefaultTargetEps;
  CLI::App* solve = app.add_subcommand("solve", "compute an equilibrium profile");
  solve->add_option("--config", config_path, "game config JSON")->required();
  solve->add_option("--method", method, "closed-form, fictitious-play, or degenerate")
      ->check(CLI::IsMember({"closed-form", "fictitious-play", "degenerate"}));
  solve->add_option("--grid-k", grid_k, "grid resolution (fictitious-play)");
  solve->add_option("--eps", eps, "target exploitability (fictitious-play)");
  solve->add_option("--max-iters", max_iters, "round limit (fictitious-play)");
  solve->add_option("--out", out_dir, "output directory")->required();

  std::string profile_path, game_path, verify_out;
  int k_audit = 10000;
  CLI::App* verify = app.add_subcommand("verify", "run equilibrium diagnostics on a profile");
  verify->add_option("--profile", profile_path, "strategy CSV")->required();
  verify->add_option("--game", game_path, "game config JSON")->required();
  verify->add_option("--k-audit", k_audit, "audit grid resolution (>= 1000)");
  verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");

  std::string sim_profile, sim_game;
  long long samples = 100000;
  std::uint64_t seed = 12345;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo replay of a profile");
  simulate->add_option("--profile", sim_profile, "strategy CSV")->required();
  simulate->add_option("--game", sim_game, "game config JSON (optional)");
  simulate->add_option("--samples", samples, "number of plays");
  simulate->add_option("--seed", seed, "RNG seed");

  std::string exp_profile, exp_game, exp_format, exp_out;
  CLI::App* exp = app.add_subcommand("export", "re-emit a stored profile as csv or json");
  exp->add_option("--profile", exp_profile, "strategy CSV")->required();
  exp->add_option("--format", exp_format, "csv or json")
      ->required()
      ->check(CLI::IsMember({"csv", "json"}));
  exp->add_option("--game", exp_game, "game config JSON (optional)");
  exp->add_option("--out", exp_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (solve->parsed()) return cmd_solve(config_path, method, grid_k, eps, max_iters, out_dir);
    if (verify->parsed()) return cmd_verify(profile_path, game_path, k_audit, verify_out);
    if (simulate->parsed()) return cmd_simulate(sim_profile, sim_game, samples, seed);
    if (exp->parsed()) return cmd_export(exp_profile, exp_game, exp_format, exp_out);
  } catch (const UsageError& e) {
    logf(kLogError, "%s", e.what());
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    logf(kLogError, "%s", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    logf(kLogError, "%s", e.what());
    return kRuntimeError;
  }
  return 0;
}
