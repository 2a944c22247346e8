#include "bpl/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bpl/analytic.hpp"
#include "bpl/dicke.hpp"
#include "bpl/errors.hpp"
#include "bpl/math_util.hpp"
#include "bpl/parallel.hpp"

namespace bpl::estimator {

namespace {

using std::complex;

constexpr double kFdStep = 1e-5;

std::vector<double> rod_gamma_vector(const CostFamily& family) {
  return std::vector<double>(std::size_t(family.L), family.gamma);
}

bool zero_mean_family(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::SeparablePure:
    case FamilyTag::SeparableMixed:
    case FamilyTag::SeparableLocal:
    case FamilyTag::GroverSlowGeneral:
    case FamilyTag::GroverSlowCorrelated:
      return true;
    default:
      return false;
  }
}

double param_sum(std::span<const double> params) {
  double s = 0.0;
  for (double p : params) s += p;
  return s;
}

// Distance from x to the nearest point of {offset + k*spacing : k integer}.
double distance_to_lattice(double x, double offset, double spacing) {
  return std::abs(std::remainder(x - offset, spacing));
}

struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  double m4 = 0.0;
};

Moments moments_of(const std::vector<double>& t, bool need_m4) {
  const std::size_t n = t.size();
  std::vector<double> tmp(n);
  Moments out;
  out.mean = pairwise_sum(t) / double(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = t[i] * t[i];
  out.m2 = pairwise_sum(tmp) / double(n);
  if (need_m4) {
    for (std::size_t i = 0; i < n; ++i) tmp[i] = tmp[i] * tmp[i];
    out.m4 = pairwise_sum(tmp) / double(n);
  }
  return out;
}

// Standard error of the mean of x from its first two moments.
double sem(double mean, double m2, std::size_t n) {
  const double centered = std::max(0.0, m2 - mean * mean);
  return std::sqrt(centered / double(n - 1));
}

EstimateRecord finalize_record(const std::vector<double>& t, MomentTarget target,
                               bool zero_mean, const CostFamily& family,
                               std::uint64_t seed) {
  const std::size_t n = t.size();
  const Moments mom = moments_of(t, target == MomentTarget::Derivative);
  EstimateRecord rec;
  rec.mean = mom.mean;
  rec.second_moment = mom.m2;
  rec.samples = n;
  rec.seed = seed;
  rec.family = family;
  rec.target = target;
  rec.zero_mean_symmetry = zero_mean && target == MomentTarget::Derivative;
  if (rec.zero_mean_symmetry) {
    rec.variance = mom.m2;
  } else {
    rec.variance =
        std::max(0.0, mom.m2 - mom.mean * mom.mean) * double(n) / double(n - 1);
  }
  if (target == MomentTarget::Derivative) {
    // Primary estimate is the variance; its standard error comes from the
    // spread of the squared samples.
    rec.std_err = sem(mom.m2, mom.m4, n);
  } else {
    rec.std_err = sem(mom.mean, mom.m2, n);
  }
  return rec;
}

}  // namespace

double evaluate_cost(const CostFamily& family, std::span<const double> params) {
  family.validate();
  if (params.size() != family.parameter_count())
    throw DimensionMismatch("evaluate_cost: wrong parameter count");
  switch (family.tag) {
    case FamilyTag::SeparablePure:
      return analytic::cost_separable_pure(param_sum(params), family.n);
    case FamilyTag::SeparableMixed:
      return analytic::cost_separable_mixed(param_sum(params), family.n, family.delta);
    case FamilyTag::SeparableLocal:
      return analytic::cost_separable_local(param_sum(params));
    case FamilyTag::JxJyAsymptotic: {
      // Slots 0..L-1 are the X-rotation angles, L..2L-1 the Y-rotation ones.
      const std::size_t L = std::size_t(family.L);
      return dicke::jxjy_cost_exact(params.first(L), params.subspan(L), family.n);
    }
    case FamilyTag::XiSeparableM1:
      throw DomainError(
          "evaluate_cost: xi-separable-m1 has no angle parameters; use "
          "xi_separable_grad_mc");
    case FamilyTag::GroverSlowGeneral:
      return dicke::grover_slow_cost_exact(params, family.gamma, family.n);
    case FamilyTag::GroverSlowCorrelated: {
      const std::vector<double> theta(std::size_t(family.L), params[0]);
      return dicke::grover_slow_cost_exact(theta, family.gamma, family.n);
    }
    case FamilyTag::GroverExact:
      return dicke::grover_cost_exact(params[0], family.gamma, family.n, family.L);
    case FamilyTag::RodLocal: {
      const auto gammas = rod_gamma_vector(family);
      return analytic::rod_local_cost_linear(params, gammas, family.n).value;
    }
    case FamilyTag::RodGlobal:
      return analytic::rod_global_cost_linear(params[0], family.gamma, family.n, family.L)
          .value;
  }
  throw DomainError("evaluate_cost: unknown family");
}

GradientResult gradient(const CostFamily& family, const AngleSample& sample,
                        const GradientSpec& spec) {
  family.validate();
  if (spec.step <= 0.0) throw DomainError("gradient: step must be > 0");
  if (spec.coordinate >= sample.scheme.group_count())
    throw DomainError("gradient: coordinate out of range");
  if (sample.scheme.parameter_count() != family.parameter_count())
    throw InvalidScheme("gradient: scheme does not match family parameter count");

  GradientResult out;
  const std::vector<double> full = sample.expanded();

  // Proximity to the removable-singular sets where the equal-angle ratio
  // form (and central differences through it) degrades.
  if (family.tag == FamilyTag::GroverSlowCorrelated) {
    // cos(n theta / 4) = 0 at theta = 2pi/n + k * 4pi/n.
    const double spacing = 4.0 * kPi / family.n;
    out.singularity_warning =
        distance_to_lattice(full[0], 0.5 * spacing, spacing) < 10.0 * spec.step;
  } else if (family.tag == FamilyTag::RodGlobal) {
    out.singularity_warning = distance_to_lattice(full[0], 0.0, kPi) < 10.0 * spec.step;
  }

  if (spec.method == GradientMethod::Analytic) {
    if (!family.has_analytic_derivative())
      throw NoAnalytic(std::string(family.name()) +
                       ": no closed-form derivative; request CentralFD explicitly");
    const auto& group = sample.scheme.groups().at(spec.coordinate);
    switch (family.tag) {
      case FamilyTag::SeparablePure:
        out.value = double(group.size()) *
                    analytic::derivative_separable_pure(param_sum(full), family.n);
        return out;
      case FamilyTag::SeparableMixed:
        out.value = double(group.size()) * analytic::derivative_separable_mixed(
                                               param_sum(full), family.n, family.delta);
        return out;
      case FamilyTag::SeparableLocal:
        out.value =
            double(group.size()) * analytic::derivative_separable_local(param_sum(full));
        return out;
      case FamilyTag::GroverSlowGeneral: {
        double d = 0.0;
        for (std::size_t idx : group)
          d += analytic::grover_slow_derivative_general(full, family.gamma, family.n, idx);
        out.value = d;
        return out;
      }
      case FamilyTag::GroverSlowCorrelated:
        out.value = analytic::grover_slow_derivative_correlated(full[0], family.gamma,
                                                                family.n, family.L);
        return out;
      case FamilyTag::RodLocal: {
        const auto gammas = rod_gamma_vector(family);
        double d = 0.0;
        for (std::size_t idx : group)
          d += analytic::rod_local_derivative_linear(full, gammas, family.n, idx);
        out.value = d;
        return out;
      }
      case FamilyTag::RodGlobal:
        out.value = analytic::rod_global_derivative_linear(full[0], family.gamma,
                                                           family.n, family.L);
        return out;
      default:
        throw NoAnalytic("gradient: no closed-form derivative");
    }
  }

  // Central finite differences on the free (group) value; the chain rule
  // through the expansion is automatic.
  std::vector<double> shifted = sample.values;
  shifted[spec.coordinate] += spec.step;
  const double plus = evaluate_cost(family, expand(sample.scheme, shifted));
  shifted[spec.coordinate] -= 2.0 * spec.step;
  const double minus = evaluate_cost(family, expand(sample.scheme, shifted));
  out.value = (plus - minus) / (2.0 * spec.step);
  return out;
}

AngleSample sample_angles(const CostFamily& family, const CorrelationScheme& scheme,
                          RngStream& rng) {
  family.validate();
  if (scheme.parameter_count() != family.parameter_count())
    throw InvalidScheme("sample_angles: scheme does not match family parameter count");
  const AngleDomain domain = family.domain();
  std::vector<double> values(scheme.group_count());
  for (auto& v : values) v = rng.uniform(domain.lower, domain.upper);
  return AngleSample{std::move(values), scheme, domain};
}

EstimateRecord mc_moments(const CostFamily& family, const CorrelationScheme& scheme,
                          MomentTarget target, std::size_t samples, std::uint64_t seed) {
  family.validate();
  if (family.tag == FamilyTag::XiSeparableM1)
    throw DomainError(
        "mc_moments: xi-separable-m1 has no angle parameters; use xi_separable_grad_mc");
  if (scheme.parameter_count() != family.parameter_count())
    throw InvalidScheme("mc_moments: scheme does not match family parameter count");
  if (samples < 100) throw PreconditionError("mc_moments: need at least 100 samples");

  GradientSpec spec;
  spec.method = family.has_analytic_derivative() ? GradientMethod::Analytic
                                                 : GradientMethod::CentralFD;

  auto sample_value = [&](std::size_t i) {
    RngStream rng(seed, i);
    const AngleSample angles = sample_angles(family, scheme, rng);
    switch (target) {
      case MomentTarget::Cost:
        return evaluate_cost(family, angles.expanded());
      case MomentTarget::Derivative:
        return gradient(family, angles, spec).value;
      case MomentTarget::DerivativeSquared: {
        const double d = gradient(family, angles, spec).value;
        return d * d;
      }
      case MomentTarget::AbsDerivative:
        return std::abs(gradient(family, angles, spec).value);
    }
    return 0.0;
  };

  std::vector<double> t(samples);
  t[0] = sample_value(0);  // serial probe: surfaces errors outside the pool
  parallel_for(samples, [&](std::size_t i) { t[i] = sample_value(i); });
  return finalize_record(t, target, zero_mean_family(family.tag), family, seed);
}

EstimateRecord grover_exact_second_moment(int n, int L, IntegrationMethod method,
                                          std::size_t points_or_samples,
                                          std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw ParityError("grover_exact_second_moment: n must be even and >= 2");
  if (L < 0) throw DomainError("grover_exact_second_moment: L must be >= 0");

  CostFamily family;
  family.tag = FamilyTag::GroverExact;
  family.n = n;
  family.L = L;
  family.gamma = kPi;

  auto derivative_sq = [&](double alpha) {
    const double plus = dicke::grover_cost_exact(alpha + kFdStep, kPi, n, L);
    const double minus = dicke::grover_cost_exact(alpha - kFdStep, kPi, n, L);
    const double d = (plus - minus) / (2.0 * kFdStep);
    return d * d;
  };

  if (method == IntegrationMethod::Quadrature) {
    const std::size_t nodes = points_or_samples;
    if (nodes < 2) throw PreconditionError("grover_exact_second_moment: need >= 2 nodes");
    // Composite trapezoid on a periodic grid = plain node average.
    std::vector<double> t(nodes);
    parallel_for(nodes, [&](std::size_t i) {
      t[i] = derivative_sq(kTwoPi * double(i) / double(nodes));
    });
    const Moments mom = moments_of(t, false);
    EstimateRecord rec;
    rec.mean = mom.mean;
    rec.second_moment = mom.m2;
    rec.variance = 0.0;
    rec.std_err = 0.0;  // deterministic quadrature
    rec.samples = nodes;
    rec.seed = seed;
    rec.family = family;
    rec.target = MomentTarget::DerivativeSquared;
    return rec;
  }

  const std::size_t samples = points_or_samples;
  if (samples < 100)
    throw PreconditionError("grover_exact_second_moment: need at least 100 samples");
  std::vector<double> t(samples);
  parallel_for(samples, [&](std::size_t i) {
    RngStream rng(seed, i);
    t[i] = derivative_sq(rng.uniform(0.0, kTwoPi));
  });
  return finalize_record(t, MomentTarget::DerivativeSquared, false, family, seed);
}

std::array<complex<double>, 4> haar_u2_sample(RngStream& rng) {
  // QR of a 2x2 complex-normal (Ginibre) matrix; Gram-Schmidt with real
  // positive diagonal of R is exactly the Haar-uniform Q factor.
  while (true) {
    std::array<complex<double>, 4> g;  // row-major Ginibre
    for (auto& e : g) {
      const auto z = rng.next_normal_pair();
      e = complex<double>(z[0], z[1]);
    }
    const double r00 = std::sqrt(std::norm(g[0]) + std::norm(g[2]));
    if (r00 < 1e-300) continue;  // measure-zero degenerate draw
    const complex<double> q00 = g[0] / r00;
    const complex<double> q10 = g[2] / r00;
    const complex<double> proj = std::conj(q00) * g[1] + std::conj(q10) * g[3];
    complex<double> u0 = g[1] - proj * q00;
    complex<double> u1 = g[3] - proj * q10;
    const double r11 = std::sqrt(std::norm(u0) + std::norm(u1));
    if (r11 < 1e-300) continue;
    return {q00, u0 / r11, q10, u1 / r11};
  }
}

EstimateRecord xi_separable_grad_mc(int xi, double delta, std::size_t samples,
                                    std::uint64_t seed) {
  if (xi < 1) throw DomainError("xi_separable_grad_mc: xi must be >= 1");
  if (delta < 0.0 || delta >= 0.5)
    throw DomainError("xi_separable_grad_mc: delta must lie in [0, 1/2)");
  if (samples < 100)
    throw PreconditionError("xi_separable_grad_mc: need at least 100 samples");

  CostFamily family;
  family.tag = FamilyTag::XiSeparableM1;
  family.xi = xi;
  family.delta = delta;

  const double scale = 0.25 * double(xi) * double(xi);
  std::vector<double> t(samples);
  parallel_for(samples, [&](std::size_t i) {
    RngStream rng(seed, i);
    const auto w = haar_u2_sample(rng);
    // tr(W rho W^dag |0><0|) with rho = diag(1-delta, delta).
    const double overlap =
        (1.0 - delta) * std::norm(w[0]) + delta * std::norm(w[1]);
    t[i] = scale * std::pow(overlap, 2 * xi - 2);
  });
  return finalize_record(t, MomentTarget::DerivativeSquared, false, family, seed);
}

EstimateRecord fig3_left_point(int n, int L, std::size_t samples, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw ParityError("fig3_left_point: n must be even and >= 2");
  if (L < 1 || L % 4 != 0)
    throw ParityError("fig3_left_point: L must be a positive multiple of 4");
  if (samples < 100) throw PreconditionError("fig3_left_point: need at least 100 samples");

  CostFamily family;
  family.tag = FamilyTag::GroverSlowCorrelated;
  family.n = n;
  family.L = L;

  std::vector<double> t(samples);
  parallel_for(samples, [&](std::size_t i) {
    RngStream rng(seed, i);
    const double theta = rng.uniform(0.0, kTwoPi);
    const double d = analytic::grover_slow_gamma2_coefficient_derivative(theta, n, L);
    t[i] = d * d;
  });
  return finalize_record(t, MomentTarget::DerivativeSquared, false, family, seed);
}

}  // namespace bpl::estimator
