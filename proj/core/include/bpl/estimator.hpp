#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>

#include "bpl/correlation.hpp"
#include "bpl/cost_family.hpp"
#include "bpl/rng.hpp"

namespace bpl::estimator {

// Evaluate one cost family at a full-length parameter vector (length
// family.parameter_count()). Separable and rod families use their closed
// forms (rod families are the O(gamma)-linearized costs); jxjy and the
// grover families run the exact collective simulator. XiSeparableM1 has no
// angle parameters (DomainError).
double evaluate_cost(const CostFamily& family, std::span<const double> params);

enum class GradientMethod { Analytic, CentralFD };

struct GradientSpec {
  GradientMethod method = GradientMethod::Analytic;
  double step = 1e-5;          // CentralFD only; must be > 0
  std::size_t coordinate = 0;  // correlation-group index
};

// Derivative of the family cost with respect to free value `coordinate` of
// the sample (chain rule sums the group's member slots). value is the
// derivative; singularity_warning is set when the point lies within
// 10*step of a recorded removable-singular set (equal-angle slow-oracle
// ratio form: cos(n theta/4) = 0; linearized global ring cost:
// sin(beta) = 0) where finite differences lose accuracy — the returned
// value itself is computed through the stable branches and remains valid.
struct GradientResult {
  double value = 0.0;
  bool singularity_warning = false;
};

// Throws NoAnalytic if method == Analytic and the family has no closed-form
// derivative (jxjy, exact-oracle grover, xi-separable); no silent fallback.
GradientResult gradient(const CostFamily& family, const AngleSample& sample,
                        const GradientSpec& spec);

// Draw one free value per correlation group, i.i.d. uniform on the family's
// domain. Deterministic in (rng.seed, rng.stream_id).
AngleSample sample_angles(const CostFamily& family, const CorrelationScheme& scheme,
                          RngStream& rng);

// Monte Carlo moments of the per-sample target value over `samples` draws
// (sample i uses RngStream(seed, i)). Derivative-based targets use the
// family's analytic derivative when it exists, central differences
// otherwise. Requires samples >= 100 (PreconditionError). Results are
// bitwise independent of the worker count.
EstimateRecord mc_moments(const CostFamily& family, const CorrelationScheme& scheme,
                          MomentTarget target, std::size_t samples, std::uint64_t seed);

enum class IntegrationMethod { Quadrature, MC };

// Second moment of d/dalpha of the exact-oracle sequence cost at
// gamma = pi, alpha uniform on [0, 2pi), derivative by central differences
// (step 1e-5). Quadrature: composite trapezoid with `points_or_samples`
// nodes (spectrally accurate for this smooth periodic integrand; check by
// doubling). MC: as mc_moments. Even n (ParityError).
EstimateRecord grover_exact_second_moment(int n, int L, IntegrationMethod method,
                                          std::size_t points_or_samples, std::uint64_t seed);

// One Haar-distributed U(2) matrix, row-major, via QR of a complex-normal
// matrix with the diagonal phase correction.
std::array<std::complex<double>, 4> haar_u2_sample(RngStream& rng);

// Monte Carlo estimate of the single-layer block-family gradient variance
// (xi^2/4) E[(tr W rho W^dag O)^{2(xi-1)}], W Haar on U(2),
// rho = diag(1-delta, delta), O = |0><0|. xi >= 1, delta in [0, 1/2).
EstimateRecord xi_separable_grad_mc(int xi, double delta, std::size_t samples,
                                    std::uint64_t seed);

// Monte Carlo second moment E[(f'(theta))^2] of the derivative of the
// gamma^2-coefficient f of the equal-angle slow-oracle cost, theta uniform
// on [0, 2pi). Even n, L % 4 == 0 (ParityError).
EstimateRecord fig3_left_point(int n, int L, std::size_t samples, std::uint64_t seed);

}  // namespace bpl::estimator
