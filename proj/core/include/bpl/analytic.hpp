#pragma once

#include <span>

namespace bpl::analytic {

enum class OrderTag {
  Exact,
  OrderGammaSquared,  // valid to O(gamma^2); error O(gamma^4)
  OrderGammaLinear,   // valid to O(gamma); error O(gamma^2)
  AsymptoticInN,
  AsymptoticInL,
};

// A closed-form value together with the truncation/asymptotic regime of the
// formula that produced it, so callers never silently mix exact and
// truncated numbers.
struct ClosedFormValue {
  double value = 0.0;
  OrderTag order_tag = OrderTag::Exact;
};

// ---- separable product-rotation families ----------------------------------

// Global-projector cost after a net rotation by theta_sum on each of n
// spins, pure start state. Returns 1 - cos^{2n}(theta_sum/2), in [0, 1].
double cost_separable_pure(double theta_sum, int n);

// d/dTheta of cost_separable_pure.
double derivative_separable_pure(double theta_sum, int n);

// Same cost with each spin depolarized by delta in [0, 1/2):
// 1 - (delta + (1-2 delta) cos^2(theta_sum/2))^n. DomainError outside range.
double cost_separable_mixed(double theta_sum, int n, double delta);
double derivative_separable_mixed(double theta_sum, int n, double delta);

// Single-spin observable variant, independent of n: 1 - cos^2(theta_sum/2).
double cost_separable_local(double theta_sum);
double derivative_separable_local(double theta_sum);

// Variance of the cost derivative over a uniformly distributed net angle:
// n^2 C(4n,2n) / (2^{4n} (4n-1)), log-space evaluation. Independent of the
// layer count.
double variance_separable_pure(int n);

// Large-n asymptote of the above: sqrt(n) / (4 sqrt(2 pi)).
double variance_separable_pure_asymptotic(int n);

// ---- collective X/Y rotations with 1/sqrt(n)-scaled angles ----------------

// Large-n fidelity cos^{2n}(sqrt(sum_j beta_j^2 + sum_j alpha_j^2)/(2 sqrt(n)))
// taking the two sums of squared angles; this family's cost is the fidelity
// itself (1 is the optimum). Tagged AsymptoticInN.
ClosedFormValue cost_jxjy_asymptotic(double sum_beta_sq, double sum_alpha_sq, int n);

// ---- xi independent blocks, one Haar layer --------------------------------

// Residue-theorem variance formula xi^2 (1-2 delta)^{2 xi - 2} / (4(2 xi - 1))
// for the single-layer block-product family. DomainError if delta not in
// [0, 1/2). At delta = 0 this matches variance_xi_separable_direct; the two
// diverge for delta > 0 (see variance_xi_separable_direct).
double variance_xi_separable_m1(int xi, double delta);

// Direct evaluation of the same moment integral,
// ((1-d)^{2 xi - 1} - d^{2 xi - 1}) xi^2 / (4 (2 xi - 1) (1 - 2 d)):
// E[(d + (1-2d) u)^{2 xi - 2}] with u uniform on [0,1], times xi^2/4. Haar
// Monte Carlo agrees with this form; the discrepancy with
// variance_xi_separable_m1 at delta > 0 is reported by tools, not resolved.
double variance_xi_separable_direct(int xi, double delta);

// Depolarization schedule delta = ln(xi)/(4 xi - 4) that keeps the
// block-family gradient variance from decaying, with the resulting
// single-spin purity (exact and its large-xi square form). DomainError for
// xi < 2. Natural logarithm.
struct PuritySchedule {
  double delta = 0.0;
  double purity_exact = 0.0;        // (1-delta)^2 + delta^2
  double purity_asymptotic = 0.0;   // (1 - delta)^2
};
PuritySchedule purity_schedule(int xi);

// ---- slow-oracle alternating pulse sequences ------------------------------

// O(gamma^2) cost of the L-pulse slow-oracle sequence with free angles:
// 1 - gamma^2 K |sum_{l=0}^{L-1} (-1)^l cos(n t_l / 2)|^2, t_0 = 0,
// t_l = theta_1 + ... + theta_l, K = C(n,n/2)/2^{2n-1} (log space).
// PreconditionError unless n is even and L % 4 == 0.
ClosedFormValue grover_slow_cost_general(std::span<const double> theta, double gamma, int n);

// Partial derivative of grover_slow_cost_general with respect to theta_k
// (k is the 0-based coordinate), at the same truncation order.
double grover_slow_derivative_general(std::span<const double> theta, double gamma, int n,
                                      std::size_t k);

// Equal-angle specialization, ratio form
// 1 - gamma^2 K sin^2((L-1)n theta/4) sin^2(L n theta/4) / cos^2(n theta/4),
// switching to the stable alternating-sum form when |cos(n theta/4)| < 1e-8
// (the singularity is removable). Equals grover_slow_cost_general at equal
// angles to 1e-12.
ClosedFormValue grover_slow_cost_correlated(double theta, double gamma, int n, int L);

// The gamma^2 coefficient f(theta) >= 0 with cost = 1 - gamma^2 f(theta),
// and its theta-derivative, both via the numerically stable sum form.
double grover_slow_gamma2_coefficient(double theta, int n, int L);
double grover_slow_gamma2_coefficient_derivative(double theta, int n, int L);

// d/dtheta of grover_slow_cost_correlated (chain rule on the sum form):
// -gamma^2 f'(theta).
double grover_slow_derivative_correlated(double theta, double gamma, int n, int L);

// Upper bound on (d/dtheta cost)^2 for the equal-angle sequence:
// C(n,n/2)^2 n^2 gamma^4 (4 L^6 / 9) / 2^{4n-2}.
double grover_slow_grad_bound(int n, int L, double gamma);

// Lower bound on E|d/dtheta cost|: C(n,n/2) gamma^2 n L^2 / (pi 2^{2n}).
double grover_slow_grad_expectation_lb(int n, int L, double gamma);

// The same bound without the n factor (a re-derivation of the integral
// yields it without that factor; tools use min of the two and report both).
double grover_slow_grad_expectation_lb_nfree(int n, int L, double gamma);

// Large-n form sqrt(2n) L^2 gamma^2 / (pi^{3/2} 2^n).
double grover_slow_grad_expectation_lb_asymptotic(int n, int L, double gamma);

// Upper bound on |d/dtheta_k cost|^2 when every pulse angle is free:
// C(n,n/2)^2 gamma^4 n^2 (L-1)^2 (L-k)^2 / 2^{4n-2}, 1-based 1 <= k <= L.
double grover_slow_uncorrelated_layer_bound(int n, int L, int k, double gamma);

// ---- concentration --------------------------------------------------------

// Chebyshev tail bound min(1, variance / epsilon^2) on P(|dC| >= epsilon).
// DomainError if epsilon <= 0 or variance < 0.
double chebyshev_tail(double variance, double epsilon);

// ---- ring-of-disagrees alternating circuits, linearized in gamma ----------

// O(gamma) local cost n/2 + (n/2) sum_j gamma_j sin(2 x_j),
// x_j = beta_{j+1} + ... + beta_L (0-based: x_j = sum_{i>j} beta_i ... see
// note below), for an n-site ring. beta and gamma must have equal length L.
// Preconditions: n >= 3, L >= 1.
// Index convention: with beta = (beta_1..beta_L) stored in beta[0..L-1],
// the j-th driver term (j = 0..L-1) uses x_j = beta[j] + ... + beta[L-1].
ClosedFormValue rod_local_cost_linear(std::span<const double> beta,
                                      std::span<const double> gamma, int n);

// Partial derivative of rod_local_cost_linear with respect to beta[k].
double rod_local_derivative_linear(std::span<const double> beta,
                                   std::span<const double> gamma, int n, std::size_t k);

// O(gamma) global cost for one shared mixer angle beta and driver angle
// gamma: 1/2^{n-1} - (n gamma / 2^n) (cos((2L+1)beta) - cos beta)/sin beta.
// Near sin beta = 0 (threshold 1e-8) the removable limit is evaluated via
// the exact equivalent sum form -2 sum_{m=1}^L sin(2 m beta).
// Preconditions: n even, n >= 4, L >= 1.
ClosedFormValue rod_global_cost_linear(double beta, double gamma, int n, int L);

// d/dbeta of rod_global_cost_linear, exact everywhere (sum form).
double rod_global_derivative_linear(double beta, double gamma, int n, int L);

// Large-L second-moment formula (2L+1)^3 n^2 gamma^2 / 2^{2n} for the
// beta-derivative of the global cost (kernel-norm asymptotic).
double rod_global_secondmoment_asymptotic(int n, int L, double gamma);

// Exact second moment of rod_global_derivative_linear over beta uniform on
// [-pi, pi): (4/3) L (L+1) (2L+1) n^2 gamma^2 / 2^{2n}. Approaches 1/3 of
// the asymptotic formula above as L grows.
double rod_global_secondmoment_linear(int n, int L, double gamma);

// Squared large-L leading term of the beta-derivative of the global cost:
// (n gamma / 2^n)^2 (2L+1)^2 (sin((2L+1)beta)/sin beta)^2, with the
// removable limit at sin beta = 0. Its mean over beta on [-pi, pi) equals
// rod_global_secondmoment_asymptotic exactly (Fejer-kernel mean = 2L+1).
double rod_global_fejer_integrand(double beta, double gamma, int n, int L);

// Lower bound on E|d/dbeta cost|: (2L+1) n gamma ln(2L+1) / (pi^2 2^{n-1}).
double rod_global_absgrad_lb(int n, int L, double gamma);

}  // namespace bpl::analytic
