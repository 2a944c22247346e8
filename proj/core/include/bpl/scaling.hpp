#pragma once

#include <span>
#include <string>
#include <utility>

namespace bpl::scaling {

enum class FitModel {
  PowerL,      // y = prefactor * L^exponent
  ExpN,        // y = prefactor * 2^(-exponent * n)
  ExpGeneric,  // y = prefactor * b^n, exponent = log2(b)
};

struct ScalingFit {
  FitModel model = FitModel::PowerL;
  double exponent = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
  std::string domain_filter;     // human-readable description of points used
  std::size_t points_used = 0;
};

// (x, y) data point: x is L or n depending on the fit.
using Point = std::pair<double, double>;

// OLS of log2(y) on log2(L) over points with L >= min_L. Needs >= 3
// surviving points (InsufficientData) with y > 0 (NonPositive).
ScalingFit fit_power_L(std::span<const Point> points, double min_L = 16);

// OLS of log2(y) on n over points with n >= min_n; exponent is the decay
// rate r (negated slope). Same error contract.
ScalingFit fit_exp_n(std::span<const Point> points, double min_n = 14);

// OLS of log2(y) on n with no filtering; exponent = log2(b) for y = d b^n.
ScalingFit fit_exp_generic(std::span<const Point> points);

enum class Bpl { BPL, NoBPL, Inconclusive };

struct BplVerdict {
  Bpl verdict = Bpl::Inconclusive;
  double decay_rate = 1.0;  // fitted b in y = d * b^n
  std::string confidence;
};

// Classification thresholds (declared, not inferred; the underlying
// definition is asymptotic and any finite-data verdict needs cutoffs).
inline constexpr double kBplDecayThreshold = 0.9;   // b below this => decay
inline constexpr double kBplExpR2Gate = 0.9;        // exp fit quality for BPL
inline constexpr double kNoBplExpR2Gate = 0.5;      // exp fit quality for NoBPL
inline constexpr double kPolyPreferenceMargin = 0.05;  // poly R2 advantage

// Fit variance-vs-n data to d * b^n and classify: BPL when b <
// kBplDecayThreshold with R^2 >= kBplExpR2Gate; NoBPL when b >= 1 with
// R^2 >= kNoBplExpR2Gate, or when a polynomial fit (log2 y vs log2 n) beats
// the exponential fit's R^2 by kPolyPreferenceMargin; else Inconclusive.
// Needs >= 4 points spanning a factor >= 2 in n (InsufficientData).
BplVerdict classify_bpl(std::span<const Point> points);

// Critical depth exponent c = r/a at which L^a 2^{-rn} is n-independent,
// from a PowerL fit (a) and an ExpN fit (r). ModelMismatch on any other
// model combination.
double crossover_exponent(const ScalingFit& a_fit, const ScalingFit& r_fit);

}  // namespace bpl::scaling
