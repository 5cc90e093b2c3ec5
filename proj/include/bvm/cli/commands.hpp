#pragma once

#include <string>

#include "bvm/cli/scenario.hpp"
#include "json.hpp"

namespace bvm::cli {

// Each command returns a report with "schema", "command" and "status"
// ("pass" or "fail"). Reports contain no timings, so equal inputs give
// byte-identical dumps.
nlohmann::json cmd_eval(const Scenario& s, const Options& o);
nlohmann::json cmd_ultrapower(const Scenario& s, const Options& o);
nlohmann::json cmd_demo_omega(const Options& o);

// Cells a table evaluation of a formula touches: pool size to the number of
// distinct variables. Commands refuse formulas past kMaxCells with SizeError.
inline constexpr double kMaxCells = double(1 << 26);
double evaluation_cells(const fol::Formula& f, std::size_t pool_size);

std::string render(const nlohmann::json& report, const std::string& format);

// 0 when every check passed, 1 otherwise.
int exit_status(const nlohmann::json& report);

}  // namespace bvm::cli
