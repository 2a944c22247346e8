#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bpl::cli::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y) in data units
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = true;
};

// Minimal deterministic line plot. Log axes use base-10 decades;
// non-positive coordinates are dropped on log axes. Throws IoError when the
// file cannot be written.
void write_line_plot(const std::string& path, const PlotSpec& spec,
                     const std::vector<Series>& series);

}  // namespace bpl::cli::svg
