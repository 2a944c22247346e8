#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>

#include "bpl/analytic.hpp"
#include "bpl/cost_family.hpp"
#include "bpl/dicke.hpp"
#include "bpl/errors.hpp"
#include "bpl/estimator.hpp"
#include "bpl/parallel.hpp"
#include "bpl/scaling.hpp"
#include "bpl/statevec.hpp"
#include "ranges.hpp"

namespace bpl::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Quadrature stays exact and cheap while the collective dimension is small;
// larger sizes switch to Monte Carlo with the per-point sample budget.
constexpr int kQuadratureMaxN = 24;

std::vector<int> values_or(const std::string& text, const char* fallback) {
  return parse_int_values(text.empty() ? std::string(fallback) : text);
}

std::uint64_t samples_or(std::uint64_t v, std::uint64_t fallback) {
  const std::uint64_t s = v == 0 ? fallback : v;
  if (s < 100) throw ConfigError("--samples must be at least 100");
  return s;
}

double real_or(double v, double fallback) { return std::isnan(v) ? fallback : v; }

// Build and validate one family instance; validation failures are
// configuration errors at the CLI boundary.
CostFamily checked_family(FamilyTag tag, int n, int L, double gamma, double delta,
                          int xi = 1) {
  CostFamily f;
  f.tag = tag;
  f.n = n;
  f.L = L;
  f.gamma = gamma;
  f.delta = delta;
  f.xi = xi;
  try {
    f.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return f;
}

std::string label_n(int n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "n=%d", n);
  return buf;
}

ResultRow base_row(const CostFamily& f, MomentTarget target) {
  ResultRow r;
  r.family = std::string(f.name());
  r.n = f.n;
  r.L = f.L;
  r.gamma = f.gamma;
  r.delta = f.delta;
  r.target = std::string(target_name(target));
  return r;
}

RunResult run_cost_or_variance(const Options& opts, bool want_variance) {
  if (opts.family.empty())
    throw ConfigError("--family is required (e.g. separable-pure)");
  FamilyTag tag;
  try {
    tag = family_from_name(opts.family);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (tag == FamilyTag::XiSeparableM1)
    throw ConfigError("xi-separable-m1 has no angle grid; use the xi-separable command");

  const auto ns = values_or(opts.n_range, "4");
  const auto Ls = values_or(opts.L_range, "4");
  const auto samples = samples_or(opts.samples, 10000);
  const double gamma = real_or(opts.gamma, 0.1);
  const double delta = real_or(opts.delta, 0.0);

  // Validate the whole grid before computing anything.
  std::vector<CostFamily> grid;
  for (int n : ns)
    for (int L : Ls) grid.push_back(checked_family(tag, n, L, gamma, delta));

  RunResult result;
  for (const CostFamily& f : grid) {
    const auto scheme = CorrelationScheme::uncorrelated(f.parameter_count());
    const auto target = want_variance ? MomentTarget::Derivative : MomentTarget::Cost;
    const auto rec = estimator::mc_moments(f, scheme, target, samples, opts.seed);
    ResultRow r = base_row(f, target);
    r.estimate = want_variance ? rec.variance : rec.mean;
    r.std_err = rec.std_err;
    r.samples = rec.samples;
    r.seed = rec.seed;
    r.method = "mc";
    result.rows.push_back(std::move(r));
  }
  return result;
}

RunResult run_fig2(const Options& opts) {
  const auto ns = values_or(opts.n_range, "1:60:1");
  const auto Ls = values_or(opts.L_range, "4");
  const auto samples = samples_or(opts.samples, 50000);

  struct Trace {
    FamilyTag tag;
    double delta;
  };
  const Trace traces[] = {{FamilyTag::SeparablePure, 0.0},
                          {FamilyTag::SeparableMixed, 0.01},
                          {FamilyTag::SeparableMixed, 0.10}};

  std::vector<CostFamily> grid;
  for (const Trace& t : traces)
    for (int n : ns)
      for (int L : Ls) grid.push_back(checked_family(t.tag, n, L, 0.0, t.delta));

  RunResult result;
  PlotData plot;
  plot.spec = {"derivative variance vs system size", "n", "Var[dC]", false, true};
  std::map<std::pair<std::string, double>, svg::Series> by_trace;

  for (const CostFamily& f : grid) {
    const auto scheme = CorrelationScheme::uncorrelated(f.parameter_count());
    const auto rec = estimator::mc_moments(f, scheme, MomentTarget::Derivative,
                                           samples, opts.seed);
    ResultRow r = base_row(f, MomentTarget::Derivative);
    r.estimate = rec.variance;
    r.std_err = rec.std_err;
    r.samples = rec.samples;
    r.seed = rec.seed;
    r.method = "mc";
    auto& series = by_trace[{r.family, r.delta}];
    if (series.label.empty()) {
      series.label = r.family;
      if (r.delta > 0.0) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%s delta=%g", r.family.c_str(), r.delta);
        series.label = buf;
      }
    }
    series.points.emplace_back(r.n, r.estimate);
    result.rows.push_back(std::move(r));
  }
  for (auto& [key, series] : by_trace) plot.series.push_back(std::move(series));
  result.plot = std::move(plot);
  return result;
}

RunResult run_fig3_right(const Options& opts) {
  const auto ns = values_or(opts.n_range, "4:28:2");
  const auto Ls = values_or(opts.L_range, "4:48:4");
  const auto samples = samples_or(opts.samples, 20000);
  const std::int64_t points = opts.points == 0 ? 4096 : opts.points;
  if (points < 2) throw ConfigError("--points must be at least 2");

  std::vector<CostFamily> grid;
  for (int n : ns)
    for (int L : Ls) grid.push_back(checked_family(FamilyTag::GroverExact, n, L, kPi, 0.0));

  RunResult result;
  PlotData plot;
  plot.spec = {"exact-oracle derivative second moment", "L", "E[(dC/dalpha)^2]",
               false, true};
  std::map<int, svg::Series> by_n;

  for (const CostFamily& f : grid) {
    const bool quad = f.n <= kQuadratureMaxN;
    const auto rec = estimator::grover_exact_second_moment(
        f.n, f.L,
        quad ? estimator::IntegrationMethod::Quadrature
             : estimator::IntegrationMethod::MC,
        quad ? static_cast<std::size_t>(points) : samples, opts.seed);
    ResultRow r = base_row(f, MomentTarget::DerivativeSquared);
    r.estimate = rec.mean;
    r.std_err = rec.std_err;
    r.samples = rec.samples;
    r.seed = rec.seed;
    r.method = quad ? "quadrature" : "mc";
    auto& series = by_n[f.n];
    if (series.label.empty()) series.label = label_n(f.n);
    series.points.emplace_back(f.L, r.estimate);
    result.rows.push_back(std::move(r));
  }
  for (auto& [n, series] : by_n) plot.series.push_back(std::move(series));
  result.plot = std::move(plot);
  return result;
}

RunResult run_fig3_left(const Options& opts) {
  const auto ns = values_or(opts.n_range, "4:28:2");
  const auto Ls = values_or(opts.L_range, "4:48:4");
  const auto samples = samples_or(opts.samples, 20000);

  std::vector<CostFamily> grid;
  for (int n : ns)
    for (int L : Ls)
      grid.push_back(checked_family(FamilyTag::GroverSlowCorrelated, n, L, 0.0, 0.0));

  RunResult result;
  PlotData plot;
  plot.spec = {"slow-oracle coefficient-derivative second moment", "L",
               "E[(f')^2]", false, true};
  std::map<int, svg::Series> by_n;

  for (const CostFamily& f : grid) {
    const auto rec = estimator::fig3_left_point(f.n, f.L, samples, opts.seed);
    ResultRow r = base_row(f, MomentTarget::DerivativeSquared);
    r.estimate = rec.mean;
    r.std_err = rec.std_err;
    r.samples = rec.samples;
    r.seed = rec.seed;
    r.method = "mc";
    auto& series = by_n[f.n];
    if (series.label.empty()) series.label = label_n(f.n);
    series.points.emplace_back(f.L, r.estimate);
    result.rows.push_back(std::move(r));
  }
  for (auto& [n, series] : by_n) plot.series.push_back(std::move(series));
  result.plot = std::move(plot);
  return result;
}

RunResult run_grover_sweep(const Options& opts) {
  const auto ns = values_or(opts.n_range, "8:20:2");
  const double gamma = real_or(opts.gamma, kPi);
  for (int n : ns) checked_family(FamilyTag::GroverExact, n, 1, gamma, 0.0);

  RunResult result;
  PlotData plot;
  plot.spec = {"exact-oracle cost vs depth", "L", "cost", true, true};

  std::vector<std::pair<double, double>> argmin_points;  // (n, argmin L)
  for (int n : ns) {
    const double alpha = std::isnan(opts.alpha) ? 2.0 * kPi / n : opts.alpha;
    std::int64_t l_max = opts.l_max;
    if (l_max == 0)
      l_max = static_cast<std::int64_t>(std::ceil(4.0 * std::exp2(n / 2.0)));
    if (l_max < 1) throw ConfigError("--L-max must be at least 1");
    if (l_max > (1 << 20))
      throw ConfigError("depth sweep too large; pass an explicit --L-max");

    const auto costs = dicke::grover_cost_exact_sweep(alpha, gamma, n,
                                                      static_cast<int>(l_max));
    svg::Series series;
    series.label = label_n(n);
    int best_L = 1;
    for (int L = 0; L <= l_max; ++L) {
      ResultRow r;
      r.family = "grover-exact";
      r.n = n;
      r.L = L;
      r.gamma = gamma;
      r.target = "cost";
      r.estimate = costs[static_cast<std::size_t>(L)];
      r.samples = 0;
      r.seed = opts.seed;
      r.method = "exact";
      result.rows.push_back(std::move(r));
      if (L >= 1) {
        series.points.emplace_back(L, costs[static_cast<std::size_t>(L)]);
        if (costs[static_cast<std::size_t>(L)] <
            costs[static_cast<std::size_t>(best_L)])
          best_L = L;
      }
    }
    plot.series.push_back(std::move(series));
    argmin_points.emplace_back(n, best_L);

    for (const char* target : {"argmin-L", "min-cost"}) {
      ResultRow r;
      r.family = "grover-exact";
      r.n = n;
      r.L = best_L;
      r.gamma = gamma;
      r.target = target;
      r.estimate = std::string(target) == "argmin-L"
                       ? static_cast<double>(best_L)
                       : costs[static_cast<std::size_t>(best_L)];
      r.seed = opts.seed;
      r.method = "exact";
      result.rows.push_back(std::move(r));
    }
  }

  if (argmin_points.size() >= 3) {
    const auto fit = scaling::fit_exp_generic(argmin_points);
    ResultRow r;
    r.family = "grover-exact";
    r.gamma = gamma;
    r.target = "fit-log2-argmin-slope";
    r.estimate = fit.exponent;
    r.samples = fit.points_used;
    r.seed = opts.seed;
    r.method = "ols";
    result.rows.push_back(std::move(r));
  }
  result.plot = std::move(plot);
  return result;
}

RunResult run_qaoa_ring(const Options& opts) {
  const auto ns = values_or(opts.n_range, "4:10:2");
  const auto Ls = values_or(opts.L_range, "1:5:1");
  for (int n : ns)
    if (n < 4 || n > 10 || n % 2 != 0)
      throw ConfigError("qaoa-ring: n must be even and in [4, 10]");
  for (int L : Ls)
    if (L < 1 || L > 6) throw ConfigError("qaoa-ring: L must be in [1, 6]");

  std::vector<std::pair<int, int>> grid;
  for (int n : ns)
    for (int L : Ls) grid.emplace_back(n, L);

  std::vector<statevec::QaoaMaximum> maxima(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    maxima[i] = statevec::maximize_correlated_qaoa(grid[i].first, grid[i].second);
  });

  RunResult result;
  PlotData plot;
  plot.spec = {"best shared-angle ring cost vs depth", "L", "max cost", false, true};
  std::map<int, svg::Series> by_n;

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [n, L] = grid[i];
    const auto& qm = maxima[i];
    const struct {
      const char* target;
      double value;
    } entries[] = {{"cost", qm.value}, {"best-beta", qm.beta}, {"best-gamma", qm.gamma}};
    for (const auto& e : entries) {
      ResultRow r;
      r.family = "ring-qaoa";
      r.n = n;
      r.L = L;
      r.target = e.target;
      r.estimate = e.value;
      r.seed = opts.seed;
      r.method = "optimize";
      result.rows.push_back(std::move(r));
    }
    auto& series = by_n[n];
    if (series.label.empty()) series.label = label_n(n);
    series.points.emplace_back(L, qm.value);
  }
  for (auto& [n, series] : by_n) plot.series.push_back(std::move(series));
  result.plot = std::move(plot);
  return result;
}

RunResult run_xi_separable(const Options& opts) {
  const auto xis = values_or(opts.xi_list, "1,2,4,8");
  const auto samples = samples_or(opts.samples, 100000);
  const double delta = real_or(opts.delta, 0.0);
  for (int xi : xis) checked_family(FamilyTag::XiSeparableM1, xi, 1, 0.0, delta, xi);

  RunResult result;
  for (int xi : xis) {
    const auto rec = estimator::xi_separable_grad_mc(xi, delta, samples, opts.seed);
    // xi independent single-qubit blocks: system size n equals xi.
    ResultRow mc;
    mc.family = "xi-separable-m1";
    mc.n = xi;
    mc.L = 1;
    mc.delta = delta;
    mc.target = "derivative";
    mc.estimate = rec.mean;
    mc.std_err = rec.std_err;
    mc.samples = rec.samples;
    mc.seed = rec.seed;
    mc.method = "mc";
    result.rows.push_back(mc);

    ResultRow m1 = mc;
    m1.estimate = analytic::variance_xi_separable_m1(xi, delta);
    m1.std_err = 0.0;
    m1.samples = 0;
    m1.method = "form-m1";
    result.rows.push_back(std::move(m1));

    ResultRow direct = mc;
    direct.estimate = analytic::variance_xi_separable_direct(xi, delta);
    direct.std_err = 0.0;
    direct.samples = 0;
    direct.method = "form-direct";
    result.rows.push_back(std::move(direct));
  }
  return result;
}

RunResult run_fit(const Options& opts) {
  if (opts.input.empty()) throw ConfigError("--input is required for fit");
  scaling::FitModel model;
  std::string model_name = opts.model;
  if (opts.model == "powerL") model = scaling::FitModel::PowerL;
  else if (opts.model == "expN") model = scaling::FitModel::ExpN;
  else if (opts.model == "expGeneric") model = scaling::FitModel::ExpGeneric;
  else throw ConfigError("--model must be powerL, expN, or expGeneric");
  if (opts.per != "n" && opts.per != "L" && opts.per != "none")
    throw ConfigError("--per must be n, L, or none");
  if (opts.per == "n" && model != scaling::FitModel::PowerL)
    throw ConfigError("--per n groups by n and fits over L; use --model powerL");
  if (opts.per == "L" && model == scaling::FitModel::PowerL)
    throw ConfigError("--per L groups by L and fits over n; use expN or expGeneric");

  auto rows = read_csv(opts.input);
  if (!opts.family.empty()) {
    std::erase_if(rows, [&](const ResultRow& r) { return r.family != opts.family; });
  }
  if (!opts.target.empty()) {
    std::erase_if(rows, [&](const ResultRow& r) { return r.target != opts.target; });
  }
  if (rows.empty()) throw ConfigError("no input rows to fit");

  // A fit across different targets is meaningless; make the user narrow it.
  std::set<std::string> targets;
  for (const ResultRow& r : rows) targets.insert(r.target);
  if (targets.size() > 1) {
    std::string list;
    for (const auto& t : targets) {
      if (!list.empty()) list += ", ";
      list += t;
    }
    throw ConfigError("input mixes targets (" + list + "); pick one with --target");
  }

  std::string family = rows.front().family;
  for (const ResultRow& r : rows)
    if (r.family != family) family = "mixed";

  // Group key and fit abscissa: per-n groups fit estimate vs L; per-L
  // groups fit estimate vs n; ungrouped picks the model's natural axis.
  std::map<int, std::vector<scaling::Point>> groups;
  for (const ResultRow& r : rows) {
    int key = 0;
    double x = 0.0;
    if (opts.per == "n") {
      key = r.n;
      x = r.L;
    } else if (opts.per == "L") {
      key = r.L;
      x = r.n;
    } else {
      x = model == scaling::FitModel::PowerL ? r.L : r.n;
    }
    groups[key].emplace_back(x, r.estimate);
  }

  auto fit_one = [&](const std::vector<scaling::Point>& pts) {
    try {
      switch (model) {
        case scaling::FitModel::PowerL: return scaling::fit_power_L(pts, opts.min_L);
        case scaling::FitModel::ExpN: return scaling::fit_exp_n(pts, opts.min_n);
        case scaling::FitModel::ExpGeneric: return scaling::fit_exp_generic(pts);
      }
      throw ConfigError("unreachable model");
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(std::string("fit failed: ") + e.what());
    }
  };

  RunResult result;
  double exponent_sum = 0.0;
  std::size_t exponent_count = 0;
  for (const auto& [key, pts] : groups) {
    const auto fit = fit_one(pts);
    const std::pair<const char*, double> outputs[] = {
        {"", fit.exponent},
        {"-prefactor", fit.prefactor},
        {"-r2", fit.r_squared},
    };
    for (const auto& [suffix, value] : outputs) {
      ResultRow r;
      r.family = family;
      r.n = opts.per == "n" ? key : 0;
      r.L = opts.per == "L" ? key : 0;
      r.target = "fit-" + model_name + suffix;
      r.estimate = value;
      r.samples = fit.points_used;
      r.method = "ols";
      result.rows.push_back(std::move(r));
    }
    const double group_floor = opts.per == "n" ? opts.min_n : opts.min_L;
    if (opts.per == "none" || static_cast<double>(key) >= group_floor) {
      exponent_sum += fit.exponent;
      ++exponent_count;
    }
  }

  if (opts.per != "none") {
    if (exponent_count == 0)
      throw ConfigError("no groups pass the summary threshold");
    ResultRow r;
    r.family = family;
    r.target = "fit-" + model_name + "-mean";
    r.estimate = exponent_sum / static_cast<double>(exponent_count);
    r.samples = exponent_count;
    r.method = "ols";
    result.rows.push_back(std::move(r));
  }
  return result;
}

}  // namespace

RunResult run_command(const std::string& command, const Options& opts) {
  if (command == "cost") return run_cost_or_variance(opts, false);
  if (command == "variance") return run_cost_or_variance(opts, true);
  if (command == "fig2") return run_fig2(opts);
  if (command == "fig3-left") return run_fig3_left(opts);
  if (command == "fig3-right") return run_fig3_right(opts);
  if (command == "grover-sweep") return run_grover_sweep(opts);
  if (command == "qaoa-ring") return run_qaoa_ring(opts);
  if (command == "fit") return run_fit(opts);
  if (command == "xi-separable") return run_xi_separable(opts);
  throw ConfigError("unknown command: " + command);
}

}  // namespace bpl::cli
