#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lotto/closed_form.hpp"
#include "lotto/io.hpp"
#include "lotto/solver.hpp"

using lotto::BidGrid;
using lotto::DiscreteStrategy;
using lotto::EquilibriumProfile;
using lotto::GameSpec;
using lotto::PiecewiseCdf;
using lotto::Regime;
using lotto::SolveConfig;
using lotto::Strategy;
using nlohmann::json;

TEST_CASE("config parsing fills defaults and accepts a null threshold") {
  SolveConfig full = lotto::parse_config(json::parse(
      R"({"budgets": [1.0, 0.5], "threshold": 3.0, "grid_k": 500})"));
  CHECK(full.game.budgets == std::vector<double>{1.0, 0.5});
  REQUIRE(full.game.threshold.has_value());
  CHECK(*full.game.threshold == 3.0);
  CHECK(full.grid_k == 500);

  SolveConfig defaulted = lotto::parse_config(json::parse(R"({"budgets": [2, 1, 1]})"));
  CHECK(!defaulted.game.threshold.has_value());
  CHECK(defaulted.grid_k == 300);

  SolveConfig null_t = lotto::parse_config(json::parse(
      R"({"budgets": [1, 1], "threshold": null})"));
  CHECK(!null_t.game.threshold.has_value());
}

TEST_CASE("config parsing rejects malformed documents") {
  CHECK_THROWS_AS(lotto::parse_config(json::parse(R"({})")), std::invalid_argument);
  CHECK_THROWS_AS(lotto::parse_config(json::parse(R"({"budgets": "oops"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(lotto::parse_config(json::parse(R"({"budgets": [1, "x"]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(lotto::parse_config(json::parse(R"({"budgets": [1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(lotto::parse_config(json::parse(R"({"budgets": [1, 1], "grid_k": 0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      lotto::parse_config(json::parse(R"({"budgets": [1, 1], "grid_k": "many"})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      lotto::parse_config(json::parse(R"({"budgets": [1, 1], "threshold": "t"})")),
      std::invalid_argument);
}

TEST_CASE("missing files surface as usage errors") {
  CHECK_THROWS_AS(lotto::read_text_file("/nonexistent/nowhere.json"), std::invalid_argument);
  CHECK_THROWS_AS(lotto::load_config("/nonexistent/nowhere.json"), std::invalid_argument);
}

TEST_CASE("piecewise strategies survive a csv round trip bit for bit") {
  auto sol = lotto::solve_two_player(GameSpec({1.5, 1.0}, 2.0));
  std::string csv = lotto::strategies_to_csv(sol.profile.strategies);
  std::vector<Strategy> back = lotto::strategies_from_csv(csv);
  REQUIRE(back.size() == 2);
  for (int i = 0; i < 2; ++i) {
    const auto& orig = std::get<PiecewiseCdf>(sol.profile.strategies[static_cast<std::size_t>(i)]);
    const auto& copy = std::get<PiecewiseCdf>(back[static_cast<std::size_t>(i)]);
    REQUIRE(copy.atoms().size() == orig.atoms().size());
    for (std::size_t a = 0; a < orig.atoms().size(); ++a) {
      CHECK(copy.atoms()[a].location == orig.atoms()[a].location);
      CHECK(copy.atoms()[a].mass == orig.atoms()[a].mass);
    }
    REQUIRE(copy.segments().size() == orig.segments().size());
    for (std::size_t g = 0; g < orig.segments().size(); ++g) {
      CHECK(copy.segments()[g].lo == orig.segments()[g].lo);
      CHECK(copy.segments()[g].hi == orig.segments()[g].hi);
      CHECK(copy.segments()[g].density == orig.segments()[g].density);
    }
  }
}

TEST_CASE("grid strategies round trip through csv with their grid intact") {
  GameSpec game({5.0, 0.8}, 2.0);
  auto report = lotto::fictitious_play(game, BidGrid(2, 2.0), 2000, 1e-3);
  std::string csv = lotto::strategies_to_csv(report.profile.strategies);
  CHECK(csv.find("# grid k=2 cap=2") != std::string::npos);
  std::vector<Strategy> back = lotto::strategies_from_csv(csv);
  REQUIRE(back.size() == 2);
  for (int i = 0; i < 2; ++i) {
    const auto& orig = std::get<DiscreteStrategy>(report.profile.strategies[static_cast<std::size_t>(i)]);
    const auto& copy = std::get<DiscreteStrategy>(back[static_cast<std::size_t>(i)]);
    CHECK(copy.grid() == orig.grid());
    CHECK(copy.probs() == orig.probs());
  }
}

TEST_CASE("csv parsing rejects malformed documents") {
  CHECK_THROWS_AS(lotto::strategies_from_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(lotto::strategies_from_csv("bogus header\n"), std::invalid_argument);
  std::string good_header = "player_index,kind,x_or_lo,hi_or_empty,mass_or_density\n";
  CHECK_THROWS_AS(lotto::strategies_from_csv(good_header), std::invalid_argument);  // no rows
  CHECK_THROWS_AS(lotto::strategies_from_csv(good_header + "0,blob,0,,1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(lotto::strategies_from_csv(good_header + "0,atom,0,,\n"),
                  std::invalid_argument);
  // a mass that breaks the distribution invariant propagates the error
  CHECK_THROWS_AS(lotto::strategies_from_csv(good_header + "0,atom,0,,0.4\n"),
                  std::invalid_argument);
}

TEST_CASE("profiles imported from csv recover their regime") {
  GameSpec low({1.0, 0.5}, 3.0);
  auto sol = lotto::solve_two_player(low);
  std::string csv = lotto::strategies_to_csv(sol.profile.strategies);
  EquilibriumProfile p = lotto::profile_from_csv(csv, low);
  CHECK(p.regime == Regime::kTwoPlayerLowBudget);
  CHECK(p.support_top == sol.profile.support_top);

  GameSpec mid({1.5, 1.0}, 2.0);
  auto mid_sol = lotto::solve_two_player(mid);
  EquilibriumProfile mp =
      lotto::profile_from_csv(lotto::strategies_to_csv(mid_sol.profile.strategies), mid);
  CHECK(mp.regime == Regime::kTwoPlayerMidBudget);

  GameSpec degen({4.0, 1.0, 1.0}, 2.0);
  auto dp = lotto::solve_degenerate_threshold(degen);
  EquilibriumProfile dr =
      lotto::profile_from_csv(lotto::strategies_to_csv(dp.strategies), degen);
  CHECK(dr.regime == Regime::kDegenerateThreshold);

  GameSpec grid_game({5.0, 0.8}, 2.0);
  auto fp = lotto::fictitious_play(grid_game, BidGrid(2, 2.0), 2000, 1e-3);
  EquilibriumProfile gr =
      lotto::profile_from_csv(lotto::strategies_to_csv(fp.profile.strategies), grid_game);
  CHECK(gr.regime == Regime::kGridSolved);
}

TEST_CASE("profile json carries the game, strategies and metadata") {
  auto sol = lotto::solve_two_player(GameSpec({1.0, 0.5}, 3.0));
  json j = lotto::profile_to_json(sol.profile);
  CHECK(j["budgets"].size() == 2);
  CHECK(j["threshold"] == 3.0);
  CHECK(j["regime"] == "two_player_low_budget");
  CHECK(j["support_top"] == 2.0);
  REQUIRE(j["players"].size() == 2);
  CHECK(j["players"][0]["kind"] == "piecewise");
  CHECK(j["players"][0]["segments"].size() == 1);
  CHECK(j["players"][1]["atoms"].size() == 1);
  CHECK(j["players"][0]["mean"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  // affine prize-share lines are reported when the construction knows them
  REQUIRE(j.contains("utility_lines"));
  REQUIRE(j["utility_lines"].size() == 2);
  CHECK(j["utility_lines"][0]["slope"].get<double>() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(j["utility_lines"][1]["intercept"].get<double>() == 0.0);

  GameSpec grid_game({5.0, 0.8}, 2.0);
  auto fp = lotto::fictitious_play(grid_game, BidGrid(2, 2.0), 2000, 1e-3);
  json g = lotto::profile_to_json(fp.profile);
  CHECK(g["players"][0]["kind"] == "grid");
  CHECK(g["players"][0]["k"] == 2);
  CHECK(g["players"][0]["probs"].size() == 3);
}

TEST_CASE("solve reports serialize checkpoints with their iteration numbers") {
  GameSpec game({5.0, 0.8}, 2.0);
  auto report = lotto::fictitious_play(game, BidGrid(2, 2.0), 2000, 1e-3);
  json j = lotto::report_to_json(report);
  CHECK(j["regime"] == "grid_solved");
  CHECK(j["converged"] == true);
  CHECK(j["iterations"].get<int>() == report.iterations);
  CHECK(j["exploitability"].get<double>() == report.exploitability);
  REQUIRE(j["checkpoints"].size() == report.checkpoints.size());
  CHECK(j["checkpoints"][0]["iteration"] == 0);
  CHECK(j["checkpoints"][1]["iteration"] == 100);
  CHECK(j["checkpoints"][1]["exploitability"].get<double>() == report.checkpoints[1]);
  CHECK(j["expected_bids"].size() == 2);
  CHECK(j["budget_slack"].size() == 2);
}

TEST_CASE("diagnostics serialize one entry per check") {
  auto sol = lotto::solve_two_player(GameSpec({1.0, 0.5}, 3.0));
  auto diag = lotto::run_applicable_checks(sol.profile, 1000);
  json j = lotto::diagnostics_to_json(diag);
  CHECK(j["overall"] == true);
  REQUIRE(j["checks"].size() == diag.checks.size());
  for (std::size_t i = 0; i < diag.checks.size(); ++i) {
    CHECK(j["checks"][i]["name"] == diag.checks[i].name);
    CHECK(j["checks"][i]["pass"] == diag.checks[i].pass);
    CHECK(j["checks"][i].contains("residual"));
    CHECK(j["checks"][i].contains("tolerance"));
    CHECK(j["checks"][i].contains("details"));
  }
}

TEST_CASE("text files round trip through the helpers") {
  std::string path = "/tmp/lotto_io_test.txt";
  lotto::write_text_file(path, "alpha\nbeta\n");
  CHECK(lotto::read_text_file(path) == "alpha\nbeta\n");
}
