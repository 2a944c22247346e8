#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rows.hpp"
#include "svg.hpp"

namespace bpl::cli {

// Raw option values as parsed; empty strings / zeros / NaNs mean "use the
// command's default", resolved inside each command.
struct Options {
  std::string n_range;
  std::string L_range;
  std::string xi_list;
  std::uint64_t samples = 0;
  std::uint64_t seed = 7;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double delta = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  std::int64_t l_max = 0;
  std::int64_t points = 0;
  std::string family;
  std::string input;
  std::string target;  // fit row filter; required when the input mixes targets
  std::string model = "powerL";
  std::string per = "none";
  double min_L = 4.0;
  double min_n = 16.0;
  std::string out;
  std::string format = "csv";
};

struct PlotData {
  svg::PlotSpec spec;
  std::vector<svg::Series> series;
};

struct RunResult {
  std::vector<ResultRow> rows;
  std::optional<PlotData> plot;  // present for figure commands
};

// Dispatch on the command name ("cost", "variance", "fig2", "fig3-left",
// "fig3-right", "grover-sweep", "qaoa-ring", "fit", "xi-separable").
// Throws ConfigError for invalid configuration and IoError for file
// problems; main maps these to exit codes 2 and 3.
RunResult run_command(const std::string& command, const Options& opts);

}  // namespace bpl::cli
