#include "bpl/scaling.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "bpl/errors.hpp"

namespace bpl::scaling {

namespace {

struct Ols {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

// OLS of y on x. Constant y (SStot ~ 0) counts as a perfect fit.
Ols ols(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) throw InsufficientData("fit: all x values coincide");
  Ols out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  if (syy < 1e-30) {
    out.r_squared = 1.0;
  } else {
    double ssres = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - (out.intercept + out.slope * x[i]);
      ssres += r * r;
    }
    out.r_squared = 1.0 - ssres / syy;
  }
  return out;
}

// Log2-transform the surviving points; `log_x` controls log2(x) vs raw x.
void prepare(std::span<const Point> points, double min_x, bool log_x,
             std::vector<double>& x, std::vector<double>& y) {
  for (const auto& [px, py] : points) {
    if (px < min_x) continue;
    if (py <= 0.0) throw NonPositive("fit: y values must be > 0 on a log scale");
    x.push_back(log_x ? std::log2(px) : px);
    y.push_back(std::log2(py));
  }
  if (x.size() < 3) throw InsufficientData("fit: need >= 3 points after filtering");
}

std::string filter_text(const char* axis, double min_x, std::size_t used,
                        std::size_t total) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s >= %g (%zu of %zu points)", axis, min_x, used,
                total);
  return buf;
}

}  // namespace

ScalingFit fit_power_L(std::span<const Point> points, double min_L) {
  std::vector<double> x, y;
  prepare(points, min_L, true, x, y);
  const Ols o = ols(x, y);
  ScalingFit fit;
  fit.model = FitModel::PowerL;
  fit.exponent = o.slope;
  fit.prefactor = std::exp2(o.intercept);
  fit.r_squared = o.r_squared;
  fit.points_used = x.size();
  fit.domain_filter = filter_text("L", min_L, x.size(), points.size());
  return fit;
}

ScalingFit fit_exp_n(std::span<const Point> points, double min_n) {
  std::vector<double> x, y;
  prepare(points, min_n, false, x, y);
  const Ols o = ols(x, y);
  ScalingFit fit;
  fit.model = FitModel::ExpN;
  fit.exponent = -o.slope;  // decay rate r in y = d * 2^(-r n)
  fit.prefactor = std::exp2(o.intercept);
  fit.r_squared = o.r_squared;
  fit.points_used = x.size();
  fit.domain_filter = filter_text("n", min_n, x.size(), points.size());
  return fit;
}

ScalingFit fit_exp_generic(std::span<const Point> points) {
  std::vector<double> x, y;
  prepare(points, -1e300, false, x, y);
  const Ols o = ols(x, y);
  ScalingFit fit;
  fit.model = FitModel::ExpGeneric;
  fit.exponent = o.slope;  // log2(b) in y = d * b^n
  fit.prefactor = std::exp2(o.intercept);
  fit.r_squared = o.r_squared;
  fit.points_used = x.size();
  fit.domain_filter = "all points";
  return fit;
}

BplVerdict classify_bpl(std::span<const Point> points) {
  if (points.size() < 4)
    throw InsufficientData("classify_bpl: need >= 4 points");
  double nmin = points.front().first, nmax = nmin;
  for (const auto& [n, y] : points) {
    nmin = std::min(nmin, n);
    nmax = std::max(nmax, n);
  }
  if (nmin <= 0.0 || nmax < 2.0 * nmin)
    throw InsufficientData("classify_bpl: n range must span a factor >= 2");

  const ScalingFit exp_fit = fit_exp_generic(points);
  const double b = std::exp2(exp_fit.exponent);

  // Competing polynomial hypothesis: log2 y linear in log2 n.
  std::vector<double> lx, ly;
  for (const auto& [n, y] : points) {
    if (y <= 0.0) throw NonPositive("classify_bpl: y values must be > 0");
    lx.push_back(std::log2(n));
    ly.push_back(std::log2(y));
  }
  const Ols poly = ols(lx, ly);

  BplVerdict out;
  out.decay_rate = b;
  char buf[160];
  std::snprintf(buf, sizeof buf, "b=%.4g, exp R2=%.4g, poly R2=%.4g", b,
                exp_fit.r_squared, poly.r_squared);
  out.confidence = buf;

  if (b < kBplDecayThreshold && exp_fit.r_squared >= kBplExpR2Gate) {
    out.verdict = Bpl::BPL;
  } else if ((b >= 1.0 && exp_fit.r_squared >= kNoBplExpR2Gate) ||
             poly.r_squared >= exp_fit.r_squared + kPolyPreferenceMargin) {
    out.verdict = Bpl::NoBPL;
  } else {
    out.verdict = Bpl::Inconclusive;
  }
  return out;
}

double crossover_exponent(const ScalingFit& a_fit, const ScalingFit& r_fit) {
  if (a_fit.model != FitModel::PowerL || r_fit.model != FitModel::ExpN)
    throw ModelMismatch("crossover_exponent: needs a PowerL fit and an ExpN fit");
  if (a_fit.exponent == 0.0)
    throw DomainError("crossover_exponent: power-law exponent is zero");
  return r_fit.exponent / a_fit.exponent;
}

}  // namespace bpl::scaling
