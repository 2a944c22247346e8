#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "bpl/errors.hpp"

namespace bpl::cli::svg {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 80.0;
constexpr double kRight = kWidth - 190.0;  // room for the legend
constexpr double kTop = 48.0;
constexpr double kBottom = kHeight - 64.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
                          "#aec7e8", "#ff9896", "#98df8a", "#c5b0d5"};
constexpr int kPaletteSize = 14;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// A "nice" step (1, 2, or 5 times a power of ten) near range/5.
double nice_step(double range) {
  if (range <= 0.0) return 1.0;
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double n = 10.0;
  if (frac <= 1.5) n = 1.0;
  else if (frac <= 3.5) n = 2.0;
  else if (frac <= 7.5) n = 5.0;
  return n * mag;
}

struct AxisScale {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;
  double map(double v, double pix_lo, double pix_hi) const {
    const double t = log ? std::log10(v) : v;
    return pix_lo + (t - lo) / (hi - lo) * (pix_hi - pix_lo);
  }
};

AxisScale make_scale(bool log, double mn, double mx) {
  AxisScale s;
  s.log = log;
  double lo = log ? std::log10(mn) : mn;
  double hi = log ? std::log10(mx) : mx;
  if (!(lo < hi)) {  // degenerate or empty range
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.04 * (hi - lo);
  s.lo = lo - pad;
  s.hi = hi + pad;
  return s;
}

}  // namespace

void write_line_plot(const std::string& path, const PlotSpec& spec,
                     const std::vector<Series>& series) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (spec.log_x && x <= 0.0) continue;
      if (spec.log_y && y <= 0.0) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  const bool have_data = std::isfinite(xmin) && std::isfinite(ymin);
  if (!have_data) {
    xmin = spec.log_x ? 1.0 : 0.0;
    xmax = spec.log_x ? 10.0 : 1.0;
    ymin = spec.log_y ? 1.0 : 0.0;
    ymax = spec.log_y ? 10.0 : 1.0;
  }
  const AxisScale xs = make_scale(spec.log_x, xmin, xmax);
  const AxisScale ys = make_scale(spec.log_y, ymin, ymax);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt((kLeft + kRight) / 2.0)
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << escape_xml(spec.title) << "</text>\n";

  // Ticks and grid lines.
  auto emit_ticks = [&](const AxisScale& sc, bool vertical) {
    std::vector<double> tick_values;  // in data units
    if (sc.log) {
      const int d0 = static_cast<int>(std::ceil(sc.lo));
      const int d1 = static_cast<int>(std::floor(sc.hi));
      const int step = std::max(1, (d1 - d0) / 10 + ((d1 - d0) % 10 ? 1 : 0));
      for (int d = d0; d <= d1; d += step) tick_values.push_back(std::pow(10.0, d));
    } else {
      const double step = nice_step(sc.hi - sc.lo);
      const double first = std::ceil(sc.lo / step) * step;
      for (double v = first; v <= sc.hi + 0.5 * step; v += step)
        tick_values.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    }
    for (double v : tick_values) {
      if (vertical) {
        const double y = sc.map(v, kBottom, kTop);
        out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(kRight) << "\" y2=\"" << fmt(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(kLeft - 8.0) << "\" y=\"" << fmt(y + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << (sc.log ? fmt_tick(v) : fmt_tick(v)) << "</text>\n";
      } else {
        const double x = sc.map(v, kLeft, kRight);
        out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\""
            << fmt(x) << "\" y2=\"" << fmt(kBottom)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kBottom + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << fmt_tick(v) << "</text>\n";
      }
    }
  };
  emit_ticks(ys, true);
  emit_ticks(xs, false);

  // Frame.
  out << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\""
      << fmt(kRight - kLeft) << "\" height=\"" << fmt(kBottom - kTop)
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  // Axis labels.
  out << "<text x=\"" << fmt((kLeft + kRight) / 2.0) << "\" y=\""
      << fmt(kHeight - 16.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape_xml(spec.x_label) << "</text>\n";
  out << "<text x=\"20\" y=\"" << fmt((kTop + kBottom) / 2.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 20 "
      << fmt((kTop + kBottom) / 2.0) << ")\">" << escape_xml(spec.y_label)
      << "</text>\n";

  // Series.
  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* color = kPalette[si % kPaletteSize];
    std::string poly;
    std::size_t kept = 0;
    for (const auto& [x, y] : series[si].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (spec.log_x && x <= 0.0) continue;
      if (spec.log_y && y <= 0.0) continue;
      poly += fmt(xs.map(x, kLeft, kRight));
      poly += ',';
      poly += fmt(ys.map(y, kBottom, kTop));
      poly += ' ';
      ++kept;
    }
    if (kept == 0) continue;
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"" << poly << "\"/>\n";
    if (kept <= 60) {
      for (const auto& [x, y] : series[si].points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        if (spec.log_x && x <= 0.0) continue;
        if (spec.log_y && y <= 0.0) continue;
        out << "<circle cx=\"" << fmt(xs.map(x, kLeft, kRight)) << "\" cy=\""
            << fmt(ys.map(y, kBottom, kTop)) << "\" r=\"2.5\" fill=\"" << color
            << "\"/>\n";
      }
    }
    // Legend entry.
    const double ly = kTop + 10.0 + 18.0 * static_cast<double>(si);
    out << "<line x1=\"" << fmt(kRight + 10.0) << "\" y1=\"" << fmt(ly)
        << "\" x2=\"" << fmt(kRight + 34.0) << "\" y2=\"" << fmt(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt(kRight + 40.0) << "\" y=\"" << fmt(ly + 4.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << escape_xml(series[si].label) << "</text>\n";
  }

  out << "</svg>\n";
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace bpl::cli::svg
