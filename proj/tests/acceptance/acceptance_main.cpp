// Acceptance gate for the experiment suite. Each numbered criterion is a
// self-contained check with its tolerances pinned in this file; the binary
// prints exactly one "criterion N: PASS|FAIL - detail" line per requested
// criterion (plus indented note lines where a criterion's job is to report
// values). Usage: bpl_acceptance [N] with N in 1..11; no argument runs all.
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "bpl/analytic.hpp"
#include "bpl/correlation.hpp"
#include "bpl/cost_family.hpp"
#include "bpl/dicke.hpp"
#include "bpl/estimator.hpp"
#include "bpl/rng.hpp"
#include "bpl/scaling.hpp"
#include "bpl/statevec.hpp"

namespace {

using bpl::AngleSample;
using bpl::CorrelationScheme;
using bpl::CostFamily;
using bpl::EstimateRecord;
using bpl::FamilyTag;
using bpl::MomentTarget;
using bpl::RngStream;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::string fmt(const char* f, ...) {
  char buf[768];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Collects sub-check failures so one criterion prints one line.
class Check {
 public:
  void require(bool cond, const std::string& what) {
    if (cond) return;
    pass_ = false;
    if (!fails_.empty()) fails_ += "; ";
    fails_ += what;
  }
  bool pass() const { return pass_; }
  std::string detail(const std::string& ok_msg) const {
    return pass_ ? ok_msg : fails_;
  }

 private:
  bool pass_ = true;
  std::string fails_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// ---------------------------------------------------------------------------
// Shared building blocks (also reused by the determinism criterion).

EstimateRecord uniform_angle_derivative_variance_record(int n, double delta,
                                                        std::uint64_t seed,
                                                        std::size_t samples) {
  CostFamily fam{delta == 0.0 ? FamilyTag::SeparablePure : FamilyTag::SeparableMixed,
                 n, 4, 0.0, delta};
  return bpl::estimator::mc_moments(fam, CorrelationScheme::uncorrelated(4),
                                    MomentTarget::Derivative, samples, seed);
}

EstimateRecord exact_oracle_second_moment_point(int n, int L) {
  using bpl::estimator::grover_exact_second_moment;
  using bpl::estimator::IntegrationMethod;
  if (n <= 24)
    return grover_exact_second_moment(n, L, IntegrationMethod::Quadrature, 4096, 505);
  return grover_exact_second_moment(n, L, IntegrationMethod::MC, 20000,
                                    500000ull + 100ull * static_cast<unsigned>(n) +
                                        static_cast<unsigned>(L));
}

EstimateRecord coefficient_second_moment_point(int n, int L) {
  return bpl::estimator::fig3_left_point(n, L, 20000,
                                         600000ull + 100ull * static_cast<unsigned>(n) +
                                             static_cast<unsigned>(L));
}

// Mean over n >= 16 of the per-n depth-power-law exponents of the
// exact-oracle derivative second moment (L = 4..48 step 4).
double exact_oracle_depth_exponent_mean() {
  std::vector<double> exps;
  for (int n = 16; n <= 28; n += 2) {
    std::vector<bpl::scaling::Point> pts;
    for (int L = 4; L <= 48; L += 4)
      pts.emplace_back(L, exact_oracle_second_moment_point(n, L).mean);
    exps.push_back(bpl::scaling::fit_power_L(pts, 4).exponent);
  }
  return mean_of(exps);
}

// ---------------------------------------------------------------------------
// criterion 1: uniform-angle derivative variance vs. its closed form.

Outcome criterion_1() {
  Stopwatch w;
  Check c;
  const double closed1 = bpl::analytic::variance_separable_pure(1);
  c.require(closed1 == 0.125, fmt("n=1 closed form %.17g != 0.125", closed1));
  for (int n : {1, 2, 4, 8, 16}) {
    const auto rec = uniform_angle_derivative_variance_record(n, 0.0, 101, 50000);
    const double closed = bpl::analytic::variance_separable_pure(n);
    const double err = std::fabs(rec.variance - closed);
    c.require(err <= 3.0 * rec.std_err,
              fmt("n=%d: |mc %.6g - closed %.6g| = %.3g > 3*stderr %.3g", n,
                  rec.variance, closed, err, 3.0 * rec.std_err));
  }
  const double secs = w.seconds();
  c.require(secs < 60.0, fmt("runtime %.1f s exceeds 60 s budget", secs));
  return {c.pass(),
          c.detail(fmt("closed-form agreement at n=1,2,4,8,16 within 3*stderr "
                       "(n=1 exactly 0.125); %.1f s < 60 s",
                       secs)),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 2: variance-vs-n traces (pure + two depolarized).

Outcome criterion_2() {
  Stopwatch w;
  Check c;
  std::vector<bpl::scaling::Point> trace_d10;
  double var10_d01 = 0.0, var60_d01 = 0.0;
  EstimateRecord pure60;
  for (int n = 1; n <= 60; ++n) {
    const auto pure = uniform_angle_derivative_variance_record(n, 0.0, 2000 + n, 50000);
    const auto d10 = uniform_angle_derivative_variance_record(n, 0.10, 3000 + n, 50000);
    const auto d01 = uniform_angle_derivative_variance_record(n, 0.01, 4000 + n, 50000);
    trace_d10.emplace_back(n, d10.variance);
    if (n == 60) pure60 = pure;
    if (n == 10) var10_d01 = d01.variance;
    if (n == 60) var60_d01 = d01.variance;
  }

  const double exact60 = bpl::analytic::variance_separable_pure(60);
  const double asym60 = std::sqrt(60.0) / (4.0 * std::sqrt(kTwoPi));
  c.require(std::fabs(pure60.variance - exact60) <= 3.0 * pure60.std_err,
            fmt("pure n=60: |mc %.6g - exact %.6g| > 3*stderr %.3g",
                pure60.variance, exact60, 3.0 * pure60.std_err));
  c.require(std::fabs(pure60.variance / asym60 - 1.0) <= 0.10,
            fmt("pure n=60: mc %.6g off asymptote %.6g by more than 10%%",
                pure60.variance, asym60));
  const auto verdict = bpl::scaling::classify_bpl(trace_d10);
  c.require(verdict.verdict == bpl::scaling::Bpl::BPL,
            fmt("delta=0.10 trace not classified BPL (decay rate %.4f)",
                verdict.decay_rate));
  c.require(var60_d01 < var10_d01,
            fmt("delta=0.01 crossover missing: var(60)=%.6g !< var(10)=%.6g",
                var60_d01, var10_d01));
  const double secs = w.seconds();
  c.require(secs < 300.0, fmt("runtime %.1f s exceeds 300 s budget", secs));
  return {c.pass(),
          c.detail(fmt("n=60 within 10%% of asymptote %.4f and 3*stderr of exact; "
                       "delta=0.10 trace BPL (decay %.3f); delta=0.01 crossover "
                       "var(60)=%.3g < var(10)=%.3g; %.1f s < 300 s",
                       asym60, verdict.decay_rate, var60_d01, var10_d01, secs)),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 3: symmetric-subspace simulator vs. full statevector.

Outcome criterion_3() {
  namespace dk = bpl::dicke;
  namespace sv = bpl::statevec;
  Stopwatch w;
  Check c;
  RngStream rng(333, 0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u32() % 9u);  // 2..10
    const int L = 1 + static_cast<int>(rng.next_u32() % 8u);  // 1..8
    dk::DickeVector d = dk::zero_state(n);
    sv::StateVector s = sv::embed_dicke(d);
    for (int layer = 0; layer < L; ++layer) {
      const double gamma = rng.uniform(0.0, kTwoPi);
      d = dk::oracle_phase(d, gamma);
      s.amps[0] *= std::polar(1.0, gamma);
      const double alpha = rng.uniform(-kPi, kPi);
      const auto axis = static_cast<dk::Axis>(rng.next_u32() % 3u);
      d = dk::rotate(d, axis, alpha);
      s = sv::product_rotation(s, std::vector<double>(static_cast<std::size_t>(n), alpha),
                               axis);
    }
    const double cost_d = 1.0 - std::norm(d.amps[static_cast<std::size_t>(n)]);
    const double cost_s = 1.0 - std::norm(s.amps[0]);
    const double diff = std::fabs(cost_d - cost_s);
    worst = std::max(worst, diff);
    c.require(diff <= 1e-10,
              fmt("trial %d (n=%d, L=%d): |cost gap| = %.3g > 1e-10", trial, n, L, diff));
  }
  return {c.pass(),
          c.detail(fmt("50 random collective circuits agree; worst cost gap %.3g "
                       "<= 1e-10; %.1f s",
                       worst, w.seconds())),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 4: order-gamma^2 closed forms vs. the exact simulator.

Outcome criterion_4() {
  Check c;
  const double gamma = 1e-3;
  const double tol = 100.0 * gamma * gamma * gamma * gamma;
  double worst = 0.0;
  for (int n : {4, 8}) {
    for (int L : {4, 8}) {
      for (int i = 0; i < 16; ++i) {
        const double theta = kTwoPi * i / 16.0 + 0.05;
        const std::vector<double> thetas(static_cast<std::size_t>(L), theta);
        const double exact = bpl::dicke::grover_slow_cost_exact(thetas, gamma, n);
        const double closed =
            bpl::analytic::grover_slow_cost_correlated(theta, gamma, n, L).value;
        const double coeff_form =
            1.0 - gamma * gamma *
                      bpl::analytic::grover_slow_gamma2_coefficient(theta, n, L);
        const double d1 = std::fabs(exact - closed);
        const double d2 = std::fabs(exact - coeff_form);
        worst = std::max({worst, d1, d2});
        c.require(d1 <= tol, fmt("(n=%d,L=%d,theta=%.3f): |exact-closed| = %.3g > %.3g",
                                 n, L, theta, d1, tol));
        c.require(d2 <= tol,
                  fmt("(n=%d,L=%d,theta=%.3f): |exact-coefficient form| = %.3g > %.3g",
                      n, L, theta, d2, tol));
      }
    }
  }
  return {c.pass(),
          c.detail(fmt("both closed forms track the exact cost at gamma=1e-3 over "
                       "(n,L) in {4,8}^2; worst |diff| %.3g <= %.3g",
                       worst, tol)),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 5: exact-oracle derivative second-moment scaling fits.

Outcome criterion_5() {
  Stopwatch w;
  Check c;
  std::vector<int> ns, Ls;
  for (int n = 4; n <= 28; n += 2) ns.push_back(n);
  for (int L = 4; L <= 48; L += 4) Ls.push_back(L);

  // grid[i][j] = second moment at (ns[i], Ls[j])
  std::vector<std::vector<double>> grid(ns.size(), std::vector<double>(Ls.size()));
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = 0; j < Ls.size(); ++j)
      grid[i][j] = exact_oracle_second_moment_point(ns[i], Ls[j]).mean;

  std::vector<double> a_exps;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 16) continue;
    std::vector<bpl::scaling::Point> pts;
    for (std::size_t j = 0; j < Ls.size(); ++j) pts.emplace_back(Ls[j], grid[i][j]);
    a_exps.push_back(bpl::scaling::fit_power_L(pts, 4).exponent);
  }
  const double a_mean = mean_of(a_exps);

  std::vector<double> r_exps;
  for (std::size_t j = 0; j < Ls.size(); ++j) {
    std::vector<bpl::scaling::Point> pts;
    for (std::size_t i = 0; i < ns.size(); ++i) pts.emplace_back(ns[i], grid[i][j]);
    r_exps.push_back(bpl::scaling::fit_exp_n(pts, 14).exponent);
  }
  const double r_mean = mean_of(r_exps);

  c.require(a_mean >= 4.5 && a_mean <= 5.5,
            fmt("depth exponent mean a = %.4f outside [4.5, 5.5]", a_mean));
  c.require(r_mean >= 1.6 && r_mean <= 2.0,
            fmt("decay exponent mean r = %.4f outside [1.6, 2.0]", r_mean));
  const double secs = w.seconds();
  c.require(secs < 1800.0, fmt("runtime %.1f s exceeds 1800 s budget", secs));
  return {c.pass(),
          c.detail(fmt("a_mean = %.4f in [4.5, 5.5] (per-n fits, n >= 16); "
                       "r_mean = %.4f in [1.6, 2.0] (per-L fits, n >= 14); "
                       "%.1f s < 1800 s",
                       a_mean, r_mean, secs)),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 6: coefficient-derivative second-moment fits + crossover.

Outcome criterion_6() {
  Stopwatch w;
  Check c;
  std::vector<int> ns, Ls;
  for (int n = 4; n <= 28; n += 2) ns.push_back(n);
  for (int L = 4; L <= 48; L += 4) Ls.push_back(L);

  std::vector<std::vector<double>> grid(ns.size(), std::vector<double>(Ls.size()));
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = 0; j < Ls.size(); ++j)
      grid[i][j] = coefficient_second_moment_point(ns[i], Ls[j]).mean;

  std::vector<double> r_exps;
  for (std::size_t j = 0; j < Ls.size(); ++j) {
    std::vector<bpl::scaling::Point> pts;
    for (std::size_t i = 0; i < ns.size(); ++i) pts.emplace_back(ns[i], grid[i][j]);
    r_exps.push_back(bpl::scaling::fit_exp_n(pts, 14).exponent);
  }
  const double r_mean = mean_of(r_exps);
  c.require(r_mean >= 1.7 && r_mean <= 2.1,
            fmt("decay exponent mean r = %.4f outside [1.7, 2.1]", r_mean));

  const double a_mean = exact_oracle_depth_exponent_mean();
  bpl::scaling::ScalingFit a_fit;
  a_fit.model = bpl::scaling::FitModel::PowerL;
  a_fit.exponent = a_mean;
  bpl::scaling::ScalingFit r_fit;
  r_fit.model = bpl::scaling::FitModel::ExpN;
  r_fit.exponent = r_mean;
  const double cx = bpl::scaling::crossover_exponent(a_fit, r_fit);
  c.require(cx >= 0.31 && cx <= 0.41,
            fmt("crossover exponent %.4f outside [0.31, 0.41] (a=%.4f, r=%.4f)", cx,
                a_mean, r_mean));
  return {c.pass(),
          c.detail(fmt("r_mean = %.4f in [1.7, 2.1] (per-L fits, n >= 14); "
                       "crossover r/a = %.4f in [0.31, 0.41] (a = %.4f); %.1f s",
                       r_mean, cx, a_mean, w.seconds())),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 7: gradient bound suite for the slow-oracle sequences.

Outcome criterion_7() {
  namespace an = bpl::analytic;
  using bpl::estimator::gradient;
  using bpl::estimator::GradientSpec;
  using bpl::estimator::mc_moments;
  using bpl::estimator::sample_angles;
  Stopwatch w;
  Check c;
  constexpr std::size_t kSamples = 10000;
  const double gamma = 0.01;

  for (int n : {4, 8}) {
    for (int L : {4, 8}) {
      const CostFamily shared{FamilyTag::GroverSlowCorrelated, n, L, gamma};
      const auto scheme1 = CorrelationScheme::uncorrelated(1);

      // Collect shared-angle derivative samples once for max + Chebyshev.
      std::vector<double> d(kSamples);
      for (std::size_t i = 0; i < kSamples; ++i) {
        RngStream rng(7070, i);
        const auto sample = sample_angles(shared, scheme1, rng);
        d[i] = gradient(shared, sample, GradientSpec{}).value;
      }
      double max_sq = 0.0, mu = 0.0;
      for (double x : d) {
        max_sq = std::max(max_sq, x * x);
        mu += x;
      }
      mu /= static_cast<double>(kSamples);
      double var = 0.0;
      for (double x : d) var += (x - mu) * (x - mu);
      var /= static_cast<double>(kSamples - 1);

      const double bound = an::grover_slow_grad_bound(n, L, gamma);
      c.require(max_sq <= bound, fmt("(n=%d,L=%d): max (dC)^2 = %.3g > bound %.3g", n,
                                     L, max_sq, bound));

      const double sd = std::sqrt(var);
      for (int k = 1; k <= 3; ++k) {
        std::size_t hits = 0;
        for (double x : d)
          if (std::fabs(x - mu) >= k * sd) ++hits;
        const double freq = static_cast<double>(hits) / static_cast<double>(kSamples);
        const double tail = an::chebyshev_tail(var, k * sd);
        c.require(freq <= tail,
                  fmt("(n=%d,L=%d): tail freq %.4f at %d sd exceeds Chebyshev %.4f",
                      n, L, freq, k, tail));
      }

      const auto abs_rec =
          mc_moments(shared, scheme1, MomentTarget::AbsDerivative, kSamples, 7171);
      const double lb = std::min(an::grover_slow_grad_expectation_lb(n, L, gamma),
                                 an::grover_slow_grad_expectation_lb_nfree(n, L, gamma));
      c.require(abs_rec.mean >= lb - 3.0 * abs_rec.std_err,
                fmt("(n=%d,L=%d): E|dC| = %.3g < lower bound %.3g - 3*stderr", n, L,
                    abs_rec.mean, lb));

      const CostFamily free{FamilyTag::GroverSlowGeneral, n, L, gamma};
      const auto schemeL =
          CorrelationScheme::uncorrelated(free.parameter_count());
      for (int k : {1, L / 2, L}) {
        double max_layer_sq = 0.0;
        GradientSpec spec;
        spec.coordinate = static_cast<std::size_t>(k - 1);
        for (std::size_t i = 0; i < kSamples; ++i) {
          RngStream rng(7272, i);
          const auto sample = sample_angles(free, schemeL, rng);
          const double g = gradient(free, sample, spec).value;
          max_layer_sq = std::max(max_layer_sq, g * g);
        }
        const double layer_bound =
            an::grover_slow_uncorrelated_layer_bound(n, L, k, gamma);
        c.require(max_layer_sq <= layer_bound,
                  fmt("(n=%d,L=%d,k=%d): max (dC/dtheta_k)^2 = %.3g > bound %.3g", n,
                      L, k, max_layer_sq, layer_bound));
      }
    }
  }
  return {c.pass(),
          c.detail(fmt("squared-gradient bound, Chebyshev tails, |gradient| "
                       "expectation lower bound, and layer bounds hold at "
                       "(n,L) in {4,8}^2, gamma=0.01, 1e4 samples; %.1f s",
                       w.seconds())),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 8: Haar-block gradient variance + delta-discrepancy report.

Outcome criterion_8() {
  namespace an = bpl::analytic;
  Stopwatch w;
  Check c;
  Outcome out;
  for (int xi : {1, 2, 4, 8}) {
    const auto rec = bpl::estimator::xi_separable_grad_mc(
        xi, 0.0, 100000, 808 + static_cast<unsigned>(xi));
    const double closed = an::variance_xi_separable_m1(xi, 0.0);
    c.require(std::fabs(rec.mean - closed) <= 3.0 * rec.std_err,
              fmt("xi=%d delta=0: |mc %.6g - closed %.6g| > 3*stderr %.3g", xi,
                  rec.mean, closed, 3.0 * rec.std_err));
  }

  // Report (no tolerance): at delta = 0.25 the two closed forms disagree;
  // print both next to the Monte Carlo value.
  out.notes.push_back(
      "discrepancy report at delta = 0.25 (values printed, none asserted):");
  for (int xi : {1, 2, 4, 8}) {
    const auto rec = bpl::estimator::xi_separable_grad_mc(
        xi, 0.25, 100000, 818 + static_cast<unsigned>(xi));
    const double m1 = an::variance_xi_separable_m1(xi, 0.25);
    const double direct = an::variance_xi_separable_direct(xi, 0.25);
    out.notes.push_back(
        fmt("xi=%d: first-moment form %.10g | direct integral %.10g | "
            "haar-mc %.10g (stderr %.2g)",
            xi, m1, direct, rec.mean, rec.std_err));
  }
  out.pass = c.pass();
  out.detail = c.detail(fmt("delta=0 variance matches xi^2/(4(2xi-1)) within "
                            "3*stderr for xi in {1,2,4,8}; delta=0.25 "
                            "discrepancy reported below; %.1f s",
                            w.seconds()));
  return out;
}

// ---------------------------------------------------------------------------
// criterion 9: ring-of-disagrees suite.

Outcome criterion_9() {
  namespace an = bpl::analytic;
  namespace sv = bpl::statevec;
  Stopwatch w;
  Check c;
  Outcome out;

  // (a) gamma-slope of the statevector costs vs. the linearized closed forms.
  {
    RngStream rng(909, 0);
    const double h = 3e-5;
    double worst_local = 0.0, worst_global = 0.0;
    for (int n : {4, 6}) {
      for (int draw = 0; draw < 20; ++draw) {
        const int L = 1 + static_cast<int>(rng.next_u32() % 6u);  // 1..6
        std::vector<double> beta(static_cast<std::size_t>(L));
        std::vector<double> dir(static_cast<std::size_t>(L));
        for (auto& b : beta) b = rng.uniform(-kPi, kPi);
        for (auto& g : dir) g = rng.uniform(-1.0, 1.0);

        // local cost, slope along the random gamma direction
        std::vector<double> gp(dir), gm(dir);
        for (std::size_t j = 0; j < dir.size(); ++j) {
          gp[j] = h * dir[j];
          gm[j] = -h * dir[j];
        }
        const double slope_sv =
            (sv::cost_ring_local(sv::ring_qaoa_state(beta, gp, n)) -
             sv::cost_ring_local(sv::ring_qaoa_state(beta, gm, n))) /
            (2.0 * h);
        const double slope_closed =
            an::rod_local_cost_linear(beta, dir, n).value - 0.5 * n;
        const double dl = std::fabs(slope_sv - slope_closed);
        worst_local = std::max(worst_local, dl);
        c.require(dl <= 1e-4, fmt("local slope (n=%d, L=%d): |%.6g - %.6g| = %.3g > 1e-4",
                                  n, L, slope_sv, slope_closed, dl));

        // global cost, equal angles, slope in the scalar gamma
        const double b0 = beta[0];
        const std::vector<double> beq(static_cast<std::size_t>(L), b0);
        const std::vector<double> geq_p(static_cast<std::size_t>(L), h);
        const std::vector<double> geq_m(static_cast<std::size_t>(L), -h);
        const double gslope_sv =
            (sv::cost_ring_global(sv::ring_qaoa_state(beq, geq_p, n)) -
             sv::cost_ring_global(sv::ring_qaoa_state(beq, geq_m, n))) /
            (2.0 * h);
        const double gslope_closed =
            (an::rod_global_cost_linear(b0, 0.01, n, L).value -
             an::rod_global_cost_linear(b0, 0.0, n, L).value) /
            0.01;
        const double dg = std::fabs(gslope_sv - gslope_closed);
        worst_global = std::max(worst_global, dg);
        c.require(dg <= 1e-4,
                  fmt("global slope (n=%d, L=%d): |%.6g - %.6g| = %.3g > 1e-4", n, L,
                      gslope_sv, gslope_closed, dg));
      }
    }
    out.notes.push_back(fmt("slopes: worst local gap %.3g, worst global gap %.3g "
                            "(tolerance 1e-4)",
                            worst_local, worst_global));
  }

  // (b) kernel-form quadrature of the squared global derivative vs. the
  // depth-cubed asymptotic formula (within 20%).
  {
    const int n = 8;
    const double gamma = 0.1;
    for (int L : {16, 64}) {
      const int nodes = 1001;  // above the integrand's bandwidth: exact mean
      double acc = 0.0;
      for (int i = 0; i < nodes; ++i) {
        const double beta = -kPi + kTwoPi * i / nodes;
        acc += an::rod_global_fejer_integrand(beta, gamma, n, L);
      }
      const double quad = acc / nodes;
      const double asym = an::rod_global_secondmoment_asymptotic(n, L, gamma);
      const double ratio = quad / asym;
      c.require(ratio >= 0.8 && ratio <= 1.2,
                fmt("L=%d: quadrature/asymptotic = %.4f outside [0.8, 1.2]", L, ratio));
    }
  }

  // (c) Dirichlet-kernel lower bound on the mean absolute global derivative.
  {
    const double gamma = 0.1;
    for (auto [n, L] : std::vector<std::pair<int, int>>{{4, 1}, {6, 2}, {8, 4}}) {
      const int nodes = 20001;
      double acc = 0.0;
      for (int i = 0; i < nodes; ++i) {
        const double beta = -kPi + kTwoPi * i / nodes;
        acc += std::fabs(an::rod_global_derivative_linear(beta, gamma, n, L));
      }
      const double mean_abs = acc / nodes;
      const double lb = an::rod_global_absgrad_lb(n, L, gamma);
      c.require(mean_abs >= lb, fmt("(n=%d,L=%d): E|dC| = %.6g < lower bound %.6g", n,
                                    L, mean_abs, lb));
    }
  }

  // (d) best shared-angle ring cost nondecreasing in depth.
  {
    for (int n : {4, 6, 8, 10}) {
      std::vector<double> vals;
      for (int L = 1; L <= 5; ++L)
        vals.push_back(sv::maximize_correlated_qaoa(n, L).value);
      out.notes.push_back(fmt("max cost n=%d: L=1..5 -> %.6f %.6f %.6f %.6f %.6f", n,
                              vals[0], vals[1], vals[2], vals[3], vals[4]));
      for (int L = 1; L < 5; ++L)
        c.require(vals[static_cast<std::size_t>(L)] >=
                      vals[static_cast<std::size_t>(L - 1)] - 1e-12,
                  fmt("max cost decreases at n=%d, L=%d->%d: %.6f -> %.6f", n, L, L + 1,
                      vals[static_cast<std::size_t>(L - 1)],
                      vals[static_cast<std::size_t>(L)]));
    }
  }

  out.pass = c.pass();
  out.detail = c.detail(fmt("slopes, kernel quadrature, absolute-gradient lower "
                            "bound, and depth monotonicity all hold; %.1f s",
                            w.seconds()));
  if (!out.pass)
    out.detail += fmt(" [%.1f s]", w.seconds());
  return out;
}

// ---------------------------------------------------------------------------
// criterion 10: exact-oracle depth sweep trend.

Outcome criterion_10() {
  Stopwatch w;
  Check c;
  std::vector<bpl::scaling::Point> argmin_points;
  double prev_min = 2.0;
  bool decreasing = true;
  for (int n = 8; n <= 20; n += 2) {
    const int l_max = 4 << (n / 2);  // ceil(4 * 2^(n/2)) for even n
    const auto costs = bpl::dicke::grover_cost_exact_sweep(kTwoPi / n, kPi, n, l_max);
    std::size_t best = 0;
    for (std::size_t L = 1; L < costs.size(); ++L)
      if (costs[L] < costs[best]) best = L;
    argmin_points.emplace_back(n, static_cast<double>(best));
    if (costs[best] >= prev_min) decreasing = false;
    prev_min = costs[best];
  }
  const auto fit = bpl::scaling::fit_exp_generic(argmin_points);
  c.require(fit.exponent >= 0.4 && fit.exponent <= 0.6,
            fmt("argmin-depth exponent %.4f outside [0.4, 0.6]", fit.exponent));
  c.require(decreasing, "minimum cost is not decreasing in n");
  return {c.pass(),
          c.detail(fmt("argmin-depth exponent %.4f in [0.4, 0.6] over n = 8..20; "
                       "minimum cost decreasing in n; %.1f s",
                       fit.exponent, w.seconds())),
          {}};
}

// ---------------------------------------------------------------------------
// criterion 11: bitwise determinism across worker counts.

std::vector<double> pack(const EstimateRecord& r) {
  return {r.mean, r.second_moment, r.variance, r.std_err,
          static_cast<double>(r.samples)};
}

Outcome criterion_11() {
  Stopwatch w;
  Check c;

  struct Probe {
    const char* name;
    std::function<std::vector<double>()> run;
  };
  const std::vector<Probe> probes = {
      {"uniform-angle variance mc",
       [] { return pack(uniform_angle_derivative_variance_record(8, 0.0, 101, 50000)); }},
      {"depolarized trace mc",
       [] { return pack(uniform_angle_derivative_variance_record(40, 0.10, 3040, 50000)); }},
      {"exact-oracle second moment quadrature",
       [] { return pack(exact_oracle_second_moment_point(16, 24)); }},
      {"exact-oracle second moment mc",
       [] { return pack(exact_oracle_second_moment_point(26, 8)); }},
      {"coefficient second moment mc",
       [] { return pack(coefficient_second_moment_point(16, 8)); }},
      {"slow-oracle |gradient| mc",
       [] {
         const CostFamily fam{FamilyTag::GroverSlowCorrelated, 8, 8, 0.01};
         return pack(bpl::estimator::mc_moments(fam, CorrelationScheme::uncorrelated(1),
                                                MomentTarget::AbsDerivative, 10000,
                                                7171));
       }},
      {"haar-block variance mc",
       [] { return pack(bpl::estimator::xi_separable_grad_mc(4, 0.25, 100000, 812)); }},
      {"ring maximizer",
       [] {
         const auto m = bpl::statevec::maximize_correlated_qaoa(6, 3);
         return std::vector<double>{m.beta, m.gamma, m.value};
       }},
      {"exact-oracle sweep",
       [] {
         auto v = bpl::dicke::grover_cost_exact_sweep(kTwoPi / 10, kPi, 10, 32);
         return v;
       }},
  };

  const char* saved = std::getenv("BPL_WORKERS");
  const std::string saved_value = saved ? saved : "";

  std::vector<std::vector<double>> baseline;
  for (const char* workers : {"1", "4", "16"}) {
    setenv("BPL_WORKERS", workers, 1);
    for (std::size_t p = 0; p < probes.size(); ++p) {
      const auto got = probes[p].run();
      if (std::string(workers) == "1") {
        baseline.push_back(got);
        continue;
      }
      bool same = got.size() == baseline[p].size();
      if (same)
        for (std::size_t i = 0; i < got.size(); ++i)
          same = same && std::bit_cast<std::uint64_t>(got[i]) ==
                             std::bit_cast<std::uint64_t>(baseline[p][i]);
      c.require(same, fmt("probe '%s' differs between 1 and %s workers",
                          probes[p].name, workers));
    }
  }

  if (saved)
    setenv("BPL_WORKERS", saved_value.c_str(), 1);
  else
    unsetenv("BPL_WORKERS");

  return {c.pass(),
          c.detail(fmt("%zu probes bitwise identical under 1, 4, and 16 workers; "
                       "%.1f s",
                       probes.size(), w.seconds())),
          {}};
}

Outcome run_criterion(int k) {
  switch (k) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    default: return {false, "unknown criterion", {}};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc >= 2) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
      return 2;
    }
    which.push_back(k);
  } else {
    for (int k = 1; k <= 11; ++k) which.push_back(k);
  }

  bool all_pass = true;
  for (int k : which) {
    Outcome o;
    try {
      o = run_criterion(k);
    } catch (const std::exception& e) {
      o = {false, fmt("exception: %s", e.what()), {}};
    }
    std::printf("criterion %d: %s - %s\n", k, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    for (const auto& note : o.notes) std::printf("  note: %s\n", note.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
