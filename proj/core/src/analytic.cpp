#include "bpl/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bpl/errors.hpp"
#include "bpl/math_util.hpp"

namespace bpl::analytic {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSingularEps = 1e-8;

void require_slow_grover_parity(int n, long L) {
  if (n < 2 || n % 2 != 0)
    throw PreconditionError("slow-oracle closed form: n must be even and >= 2");
  if (L < 1 || L % 4 != 0)
    throw PreconditionError("slow-oracle closed form: L must be a positive multiple of 4");
}

// K = C(n, n/2) / 2^{2n-1}.
double slow_grover_prefactor(int n) { return central_binomial_over_pow2(n, 2L * n - 1); }

// Alternating partial-sum cosine series of the gamma^2 coefficient and its
// derivative structure. t_l = theta_1 + ... + theta_l, t_0 = 0; the last
// angle never enters (cost is exactly independent of theta_L).
double alternating_sum(std::span<const double> theta, int n) {
  double s = 0.0;
  double t = 0.0;
  double sign = 1.0;
  const std::size_t L = theta.size();
  for (std::size_t l = 0; l < L; ++l) {
    if (l > 0) t += theta[l - 1];
    s += sign * std::cos(0.5 * n * t);
    sign = -sign;
  }
  return s;
}

}  // namespace

double cost_separable_pure(double theta_sum, int n) {
  if (n < 1) throw DomainError("cost_separable_pure: n must be >= 1");
  const double c = std::cos(0.5 * theta_sum);
  return 1.0 - std::pow(c * c, n);
}

double derivative_separable_pure(double theta_sum, int n) {
  if (n < 1) throw DomainError("derivative_separable_pure: n must be >= 1");
  const double c = std::cos(0.5 * theta_sum);
  return double(n) * std::pow(c * c, n - 1) * c * std::sin(0.5 * theta_sum);
}

double cost_separable_mixed(double theta_sum, int n, double delta) {
  if (n < 1) throw DomainError("cost_separable_mixed: n must be >= 1");
  if (delta < 0.0 || delta >= 0.5)
    throw DomainError("cost_separable_mixed: delta must lie in [0, 1/2)");
  const double c = std::cos(0.5 * theta_sum);
  const double g = delta + (1.0 - 2.0 * delta) * c * c;
  return 1.0 - std::pow(g, n);
}

double derivative_separable_mixed(double theta_sum, int n, double delta) {
  if (n < 1) throw DomainError("derivative_separable_mixed: n must be >= 1");
  if (delta < 0.0 || delta >= 0.5)
    throw DomainError("derivative_separable_mixed: delta must lie in [0, 1/2)");
  const double c = std::cos(0.5 * theta_sum);
  const double g = delta + (1.0 - 2.0 * delta) * c * c;
  return 0.5 * double(n) * std::pow(g, n - 1) * (1.0 - 2.0 * delta) * std::sin(theta_sum);
}

double cost_separable_local(double theta_sum) {
  const double s = std::sin(0.5 * theta_sum);
  return s * s;
}

double derivative_separable_local(double theta_sum) { return 0.5 * std::sin(theta_sum); }

double variance_separable_pure(int n) {
  if (n < 1) throw DomainError("variance_separable_pure: n must be >= 1");
  return double(n) * double(n) * binomial_over_pow2(4L * n, 2L * n, 4L * n) /
         double(4L * n - 1);
}

double variance_separable_pure_asymptotic(int n) {
  if (n < 1) throw DomainError("variance_separable_pure_asymptotic: n must be >= 1");
  return std::sqrt(double(n)) / (4.0 * std::sqrt(kTwoPi));
}

ClosedFormValue cost_jxjy_asymptotic(double sum_beta_sq, double sum_alpha_sq, int n) {
  if (n < 1) throw DomainError("cost_jxjy_asymptotic: n must be >= 1");
  if (sum_beta_sq < 0.0 || sum_alpha_sq < 0.0)
    throw DomainError("cost_jxjy_asymptotic: squared sums must be >= 0");
  const double arg = std::sqrt(sum_beta_sq + sum_alpha_sq) / (2.0 * std::sqrt(double(n)));
  const double c = std::cos(arg);
  return {std::pow(c * c, n), OrderTag::AsymptoticInN};
}

double variance_xi_separable_m1(int xi, double delta) {
  if (xi < 1) throw DomainError("variance_xi_separable_m1: xi must be >= 1");
  if (delta < 0.0 || delta >= 0.5)
    throw DomainError("variance_xi_separable_m1: delta must lie in [0, 1/2)");
  const double x = double(xi);
  return x * x * std::pow(1.0 - 2.0 * delta, 2 * xi - 2) / (4.0 * (2.0 * x - 1.0));
}

double variance_xi_separable_direct(int xi, double delta) {
  if (xi < 1) throw DomainError("variance_xi_separable_direct: xi must be >= 1");
  if (delta < 0.0 || delta >= 0.5)
    throw DomainError("variance_xi_separable_direct: delta must lie in [0, 1/2)");
  const double x = double(xi);
  if (xi == 1) return 0.25;  // constant integrand
  const double num =
      std::pow(1.0 - delta, 2 * xi - 1) - std::pow(delta, 2 * xi - 1);
  return num * x * x / (4.0 * (2.0 * x - 1.0) * (1.0 - 2.0 * delta));
}

PuritySchedule purity_schedule(int xi) {
  if (xi < 2) throw DomainError("purity_schedule: xi must be >= 2");
  PuritySchedule out;
  out.delta = std::log(double(xi)) / (4.0 * double(xi) - 4.0);
  out.purity_exact = (1.0 - out.delta) * (1.0 - out.delta) + out.delta * out.delta;
  out.purity_asymptotic = (1.0 - out.delta) * (1.0 - out.delta);
  return out;
}

ClosedFormValue grover_slow_cost_general(std::span<const double> theta, double gamma, int n) {
  require_slow_grover_parity(n, long(theta.size()));
  const double s = alternating_sum(theta, n);
  return {1.0 - gamma * gamma * slow_grover_prefactor(n) * s * s,
          OrderTag::OrderGammaSquared};
}

double grover_slow_derivative_general(std::span<const double> theta, double gamma, int n,
                                      std::size_t k) {
  require_slow_grover_parity(n, long(theta.size()));
  if (k >= theta.size())
    throw DomainError("grover_slow_derivative_general: coordinate out of range");
  const std::size_t L = theta.size();
  const double s = alternating_sum(theta, n);
  // d s / d theta_k: only partial sums t_l with l >= k+1 contain theta_k.
  double t = 0.0;
  double ds = 0.0;
  double sign = 1.0;
  for (std::size_t l = 0; l < L; ++l) {
    if (l > 0) t += theta[l - 1];
    if (l >= k + 1) ds += sign * (-0.5 * n) * std::sin(0.5 * n * t);
    sign = -sign;
  }
  return -gamma * gamma * slow_grover_prefactor(n) * 2.0 * s * ds;
}

ClosedFormValue grover_slow_cost_correlated(double theta, double gamma, int n, int L) {
  require_slow_grover_parity(n, L);
  const double k = slow_grover_prefactor(n);
  const double cs = std::cos(0.25 * n * theta);
  double f;
  if (std::abs(cs) < kSingularEps) {
    f = k * [&] {
      double s = 0.0;
      double sign = 1.0;
      for (int l = 0; l < L; ++l) {
        s += sign * std::cos(0.5 * n * double(l) * theta);
        sign = -sign;
      }
      return s * s;
    }();
  } else {
    const double s1 = std::sin(0.25 * (L - 1) * n * theta);
    const double s2 = std::sin(0.25 * L * n * theta);
    f = k * s1 * s1 * s2 * s2 / (cs * cs);
  }
  return {1.0 - gamma * gamma * f, OrderTag::OrderGammaSquared};
}

double grover_slow_gamma2_coefficient(double theta, int n, int L) {
  require_slow_grover_parity(n, L);
  double s = 0.0;
  double sign = 1.0;
  for (int l = 0; l < L; ++l) {
    s += sign * std::cos(0.5 * n * double(l) * theta);
    sign = -sign;
  }
  return slow_grover_prefactor(n) * s * s;
}

double grover_slow_gamma2_coefficient_derivative(double theta, int n, int L) {
  require_slow_grover_parity(n, L);
  double s = 0.0, ds = 0.0;
  double sign = 1.0;
  for (int l = 0; l < L; ++l) {
    const double arg = 0.5 * n * double(l) * theta;
    s += sign * std::cos(arg);
    ds += sign * (-0.5 * n * double(l)) * std::sin(arg);
    sign = -sign;
  }
  return slow_grover_prefactor(n) * 2.0 * s * ds;
}

double grover_slow_derivative_correlated(double theta, double gamma, int n, int L) {
  return -gamma * gamma * grover_slow_gamma2_coefficient_derivative(theta, n, L);
}

double grover_slow_grad_bound(int n, int L, double gamma) {
  const double log_binom = log_binomial(n, n / 2);
  const double scale = std::exp(2.0 * log_binom - (4.0 * n - 2.0) * kLn2);
  const double l6 = std::pow(double(L), 6);
  return scale * double(n) * double(n) * std::pow(gamma, 4) * (4.0 * l6 / 9.0);
}

double grover_slow_grad_expectation_lb(int n, int L, double gamma) {
  return central_binomial_over_pow2(n, 2L * n) * gamma * gamma * double(n) * double(L) *
         double(L) / kPi;
}

double grover_slow_grad_expectation_lb_nfree(int n, int L, double gamma) {
  return central_binomial_over_pow2(n, 2L * n) * gamma * gamma * double(L) * double(L) / kPi;
}

double grover_slow_grad_expectation_lb_asymptotic(int n, int L, double gamma) {
  return std::sqrt(2.0 * double(n)) * double(L) * double(L) * gamma * gamma /
         (std::pow(kPi, 1.5) * std::exp(double(n) * kLn2));
}

double grover_slow_uncorrelated_layer_bound(int n, int L, int k, double gamma) {
  const double log_binom = log_binomial(n, n / 2);
  const double scale = std::exp(2.0 * log_binom - (4.0 * n - 2.0) * kLn2);
  const double lm1 = double(L - 1);
  const double lmk = double(L - k);
  return scale * std::pow(gamma, 4) * double(n) * double(n) * lm1 * lm1 * lmk * lmk;
}

double chebyshev_tail(double variance, double epsilon) {
  if (epsilon <= 0.0) throw DomainError("chebyshev_tail: epsilon must be > 0");
  if (variance < 0.0) throw DomainError("chebyshev_tail: variance must be >= 0");
  return std::min(1.0, variance / (epsilon * epsilon));
}

ClosedFormValue rod_local_cost_linear(std::span<const double> beta,
                                      std::span<const double> gamma, int n) {
  if (n < 3) throw DomainError("rod_local_cost_linear: n must be >= 3");
  if (beta.size() != gamma.size())
    throw DimensionMismatch("rod_local_cost_linear: beta/gamma length mismatch");
  if (beta.empty()) throw DomainError("rod_local_cost_linear: L must be >= 1");
  const std::size_t L = beta.size();
  double x = 0.0;
  double acc = 0.0;
  for (std::size_t j = L; j-- > 0;) {  // x_j = beta[j] + ... + beta[L-1]
    x += beta[j];
    acc += gamma[j] * std::sin(2.0 * x);
  }
  return {0.5 * n + 0.5 * n * acc, OrderTag::OrderGammaLinear};
}

double rod_local_derivative_linear(std::span<const double> beta,
                                   std::span<const double> gamma, int n, std::size_t k) {
  if (n < 3) throw DomainError("rod_local_derivative_linear: n must be >= 3");
  if (beta.size() != gamma.size())
    throw DimensionMismatch("rod_local_derivative_linear: beta/gamma length mismatch");
  if (k >= beta.size())
    throw DomainError("rod_local_derivative_linear: coordinate out of range");
  const std::size_t L = beta.size();
  // x_j contains beta[k] exactly when j <= k.
  std::vector<double> x(L, 0.0);
  double acc = 0.0;
  for (std::size_t j = L; j-- > 0;) {
    acc += beta[j];
    x[j] = acc;
  }
  double d = 0.0;
  for (std::size_t j = 0; j <= k; ++j) d += gamma[j] * std::cos(2.0 * x[j]);
  return double(n) * d;
}

namespace {

void require_rod_global(int n, int L) {
  if (n < 4 || n % 2 != 0)
    throw DomainError("rod_global: n must be even and >= 4");
  if (L < 1) throw DomainError("rod_global: L must be >= 1");
}

// (cos((2L+1)beta) - cos(beta)) / sin(beta), continued through sin(beta)=0
// by the exact identity -2 sum_{m=1}^L sin(2 m beta).
double rod_global_ratio(double beta, int L) {
  const double sb = std::sin(beta);
  if (std::abs(sb) >= kSingularEps)
    return (std::cos((2.0 * L + 1.0) * beta) - std::cos(beta)) / sb;
  double acc = 0.0;
  for (int m = 1; m <= L; ++m) acc += std::sin(2.0 * m * beta);
  return -2.0 * acc;
}

}  // namespace

ClosedFormValue rod_global_cost_linear(double beta, double gamma, int n, int L) {
  require_rod_global(n, L);
  const double base = std::exp((1.0 - n) * kLn2);
  const double coef = double(n) * gamma * std::exp(-double(n) * kLn2);
  return {base - coef * rod_global_ratio(beta, L), OrderTag::OrderGammaLinear};
}

double rod_global_derivative_linear(double beta, double gamma, int n, int L) {
  require_rod_global(n, L);
  const double coef = double(n) * gamma * std::exp(-double(n) * kLn2);
  double dh = 0.0;  // h'(beta), h = -2 sum sin(2 m beta)
  for (int m = 1; m <= L; ++m) dh += double(m) * std::cos(2.0 * m * beta);
  return 4.0 * coef * dh;
}

double rod_global_secondmoment_asymptotic(int n, int L, double gamma) {
  const double m = 2.0 * L + 1.0;
  return m * m * m * double(n) * double(n) * gamma * gamma *
         std::exp(-2.0 * double(n) * kLn2);
}

double rod_global_secondmoment_linear(int n, int L, double gamma) {
  return (4.0 / 3.0) * double(L) * double(L + 1) * double(2 * L + 1) * double(n) *
         double(n) * gamma * gamma * std::exp(-2.0 * double(n) * kLn2);
}

double rod_global_fejer_integrand(double beta, double gamma, int n, int L) {
  const double m = 2.0 * L + 1.0;
  const double sb = std::sin(beta);
  double kernel;  // sin((2L+1) beta) / sin(beta)
  if (std::abs(sb) >= kSingularEps) {
    kernel = std::sin(m * beta) / sb;
  } else {
    kernel = m * std::cos(m * beta) / std::cos(beta);
  }
  const double amp = m * double(n) * gamma * std::exp(-double(n) * kLn2);
  return amp * amp * kernel * kernel;
}

double rod_global_absgrad_lb(int n, int L, double gamma) {
  const double m = 2.0 * L + 1.0;
  return m * double(n) * gamma * std::log(m) /
         (kPi * kPi * std::exp((double(n) - 1.0) * kLn2));
}

}  // namespace bpl::analytic
