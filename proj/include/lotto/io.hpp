#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lotto/profile.hpp"
#include "lotto/solver.hpp"
#include "lotto/verifier.hpp"

namespace lotto {

/// Game description plus the grid resolution to use when solving on a grid.
struct SolveConfig {
  GameSpec game;
  int grid_k = kDefaultGridK;
};

/// Parses {"budgets": [...], "threshold": number|null, "grid_k": int}.
/// "threshold" may be omitted or null for an unrestricted game; "grid_k"
/// defaults to 300. Throws std::invalid_argument on malformed input.
SolveConfig parse_config(const nlohmann::json& j);
SolveConfig load_config(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// CSV with one row per atom or constant-density piece:
///   player_index,kind,x_or_lo,hi_or_empty,mass_or_density
/// Grid strategies are written as atom rows at their grid points, preceded
/// by a "# grid k=<k> cap=<cap>" comment so parsing restores the exact grid
/// representation. Numbers use enough digits to round-trip exactly.
std::string strategies_to_csv(const std::vector<Strategy>& strategies);
std::vector<Strategy> strategies_from_csv(const std::string& text);

EquilibriumProfile profile_from_csv(const std::string& text, const GameSpec& game);

nlohmann::json profile_to_json(const EquilibriumProfile& profile);
nlohmann::json report_to_json(const SolveReport& report);
nlohmann::json diagnostics_to_json(const DiagnosticsReport& report);

}  // namespace lotto
