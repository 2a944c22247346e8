#include "bpl/dicke.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "bpl/errors.hpp"
#include "bpl/math_util.hpp"

namespace bpl::dicke {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require_spin_count(int n) {
  if (n < 1) throw DomainError("dicke: n must be >= 1");
  if (n > kMaxSpins) throw SizeError("dicke: n exceeds the 128-spin limit");
}

void require_even(int n, const char* who) {
  if (n < 2 || n % 2 != 0) throw ParityError(std::string(who) + ": n must be even and >= 2");
}

void require_dims(const DickeVector& v) {
  if (v.amps.size() != std::size_t(v.n) + 1)
    throw DimensionMismatch("dicke: amplitude vector length must be n+1");
}

// Ladder coefficient c_i = sqrt(j(j+1) - m_i (m_i + 1)) for the raising
// element <m_i + 1 | J_+ | m_i>, with m_i = i - n/2.
double ladder_coeff(int n, int i) {
  const double j = 0.5 * n;
  const double m = double(i) - j;
  return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

}  // namespace

double DickeVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

CollectiveGenerator::CollectiveGenerator(Axis axis, int n) : axis_(axis), n_(n) {
  require_spin_count(n);
  const int d = n + 1;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) mat(i, j) = matrix_element(i, j);

  eigenvalues_.resize(d);
  eigenvectors_.resize(std::size_t(d) * d);
  if (axis == Axis::Z) {
    // Already diagonal with exactly known spectrum.
    for (int i = 0; i < d; ++i) {
      eigenvalues_[i] = double(i) - 0.5 * n;
      eigenvectors_[std::size_t(i) * d + i] = 1.0;
    }
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat);
  for (int k = 0; k < d; ++k) {
    // Spectrum is exactly {-n/2, ..., n/2}; snap to half-integers.
    eigenvalues_[k] = 0.5 * std::round(2.0 * solver.eigenvalues()(k));
  }
  Eigen::Map<Eigen::MatrixXcd>(eigenvectors_.data(), d, d) = solver.eigenvectors();
}

cplx CollectiveGenerator::matrix_element(int i, int j) const {
  const int d = n_ + 1;
  if (i < 0 || j < 0 || i >= d || j >= d) return 0.0;
  switch (axis_) {
    case Axis::Z:
      return i == j ? cplx(double(i) - 0.5 * n_, 0.0) : cplx(0.0);
    case Axis::X:
      if (i == j + 1) return 0.5 * ladder_coeff(n_, j);
      if (j == i + 1) return 0.5 * ladder_coeff(n_, i);
      return 0.0;
    case Axis::Y:
      if (i == j + 1) return cplx(0.0, -0.5) * ladder_coeff(n_, j);
      if (j == i + 1) return cplx(0.0, 0.5) * ladder_coeff(n_, i);
      return 0.0;
  }
  return 0.0;
}

void CollectiveGenerator::apply_rotation(double angle, std::span<cplx> amps) const {
  const int d = n_ + 1;
  if (amps.size() != std::size_t(d))
    throw DimensionMismatch("apply_rotation: amplitude vector length must be n+1");
  if (axis_ == Axis::Z) {
    for (int i = 0; i < d; ++i)
      amps[i] *= std::polar(1.0, -angle * eigenvalues_[i]);
    return;
  }
  Eigen::Map<const Eigen::MatrixXcd> v(eigenvectors_.data(), d, d);
  Eigen::Map<Eigen::VectorXcd> psi(amps.data(), d);
  Eigen::VectorXcd w = v.adjoint() * psi;
  for (int k = 0; k < d; ++k) w(k) *= std::polar(1.0, -angle * eigenvalues_[k]);
  psi = v * w;
}

std::vector<cplx> CollectiveGenerator::to_eigenbasis(std::span<const cplx> amps) const {
  const int d = n_ + 1;
  if (amps.size() != std::size_t(d))
    throw DimensionMismatch("to_eigenbasis: amplitude vector length must be n+1");
  std::vector<cplx> out(d);
  Eigen::Map<const Eigen::MatrixXcd> v(eigenvectors_.data(), d, d);
  Eigen::Map<const Eigen::VectorXcd> in(amps.data(), d);
  Eigen::Map<Eigen::VectorXcd>(out.data(), d) = v.adjoint() * in;
  return out;
}

std::vector<cplx> CollectiveGenerator::from_eigenbasis(std::span<const cplx> amps) const {
  const int d = n_ + 1;
  if (amps.size() != std::size_t(d))
    throw DimensionMismatch("from_eigenbasis: amplitude vector length must be n+1");
  std::vector<cplx> out(d);
  Eigen::Map<const Eigen::MatrixXcd> v(eigenvectors_.data(), d, d);
  Eigen::Map<const Eigen::VectorXcd> in(amps.data(), d);
  Eigen::Map<Eigen::VectorXcd>(out.data(), d) = v * in;
  return out;
}

const CollectiveGenerator& collective_matrix(Axis axis, int n) {
  require_spin_count(n);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const CollectiveGenerator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(int(axis), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<const CollectiveGenerator>(axis, n)).first;
  return *it->second;
}

DickeVector zero_state(int n) {
  require_spin_count(n);
  DickeVector v{n, std::vector<cplx>(std::size_t(n) + 1, 0.0)};
  v.amps[n] = 1.0;
  return v;
}

DickeVector rotate(const DickeVector& state, Axis axis, double angle) {
  require_dims(state);
  DickeVector out = state;
  collective_matrix(axis, state.n).apply_rotation(angle, out.amps);
  return out;
}

DickeVector oracle_phase(const DickeVector& state, double gamma) {
  require_dims(state);
  DickeVector out = state;
  out.amps[state.n] *= std::polar(1.0, gamma);
  return out;
}

std::complex<double> overlap(const DickeVector& a, const DickeVector& b) {
  if (a.n != b.n) throw DimensionMismatch("overlap: spin counts differ");
  require_dims(a);
  require_dims(b);
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

DickeVector phi1(int n) {
  require_spin_count(n);
  require_even(n, "phi1");
  // (|z=+i> + |z=-i>)/sqrt(2): component at index n-k is
  // 2^{-n/2} sqrt(C(n,k)) (i^k + (-i)^k)/sqrt(2); odd k vanishes and even k
  // contributes sign (-1)^{k/2} times sqrt(2).
  DickeVector v{n, std::vector<cplx>(std::size_t(n) + 1, 0.0)};
  for (int k = 0; k <= n; k += 2) {
    const double mag = std::exp(0.5 * log_binomial(n, k) - 0.5 * n * kLn2);
    const double sign = (k % 4 == 0) ? 1.0 : -1.0;
    v.amps[n - k] = std::sqrt(2.0) * sign * mag;
  }
  return v;
}

DickeVector phi2(int n) {
  require_spin_count(n);
  require_even(n, "phi2");
  const auto& gen = collective_matrix(Axis::Y, n);
  const int d = n + 1;
  const int zero_index = n / 2;  // ascending eigenvalues; 0 sits in the middle
  DickeVector v{n, std::vector<cplx>(std::size_t(d), 0.0)};
  std::size_t argmax = 0;
  double best = -1.0;
  for (int i = 0; i < d; ++i) {
    v.amps[i] = gen.eigenvectors()[std::size_t(zero_index) * d + i];
    if (std::abs(v.amps[i]) > best) {
      best = std::abs(v.amps[i]);
      argmax = std::size_t(i);
    }
  }
  const cplx pivot = v.amps[argmax];
  const cplx phase = std::conj(pivot) / std::abs(pivot);
  for (auto& a : v.amps) a *= phase;
  return v;
}

DickeVector coherent_state(cplx z, int n) {
  require_spin_count(n);
  if (z == cplx(0.0)) return zero_state(n);
  DickeVector v{n, std::vector<cplx>(std::size_t(n) + 1, 0.0)};
  const double log_norm = -0.5 * n * std::log1p(std::norm(z));
  const double log_abs_z = std::log(std::abs(z));
  const double arg_z = std::arg(z);
  for (int k = 0; k <= n; ++k) {
    const double mag = std::exp(0.5 * log_binomial(n, k) + k * log_abs_z + log_norm);
    v.amps[n - k] = std::polar(mag, k * arg_z);
  }
  return v;
}

cplx coherent_overlap(cplx z, cplx zp, int n) {
  require_spin_count(n);
  const double log_norms =
      -0.5 * n * (std::log1p(std::norm(z)) + std::log1p(std::norm(zp)));
  const cplx base = 1.0 + std::conj(z) * zp;
  return std::pow(base, n) * std::exp(log_norms);
}

cplx rotated_coherent_parameter(cplx z, double a) {
  const double mag = std::abs(a);
  const double s = (a >= 0.0) ? 1.0 : -1.0;  // a/|a|, taken as 1 at a = 0
  const double c = std::cos(mag);
  const double sn = std::sin(mag);
  const cplx den = z * (s * sn) + c;
  if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(z)))
    throw PoleError("rotated_coherent_parameter: rotated state leaves the chart");
  return (z * c - s * sn) / den;
}

double grover_cost_exact(double alpha, double gamma, int n, int L) {
  require_even(n, "grover_cost_exact");
  if (L < 0) throw DomainError("grover_cost_exact: L must be >= 0");
  const auto costs = grover_cost_exact_sweep(alpha, gamma, n, L);
  return costs.back();
}

std::vector<double> grover_cost_exact_sweep(double alpha, double gamma, int n, int L_max) {
  require_even(n, "grover_cost_exact_sweep");
  if (L_max < 0) throw DomainError("grover_cost_exact_sweep: L_max must be >= 0");
  const auto& gen = collective_matrix(Axis::Y, n);
  const int d = n + 1;

  // Everything in the J_y eigenbasis: the rotation is diagonal and the
  // oracle is rank one, so each layer costs O(n).
  std::vector<cplx> e_n(std::size_t(d), 0.0);
  e_n[n] = 1.0;
  const std::vector<cplx> v0 = gen.to_eigenbasis(e_n);  // image of |0...0>
  std::vector<cplx> psi = gen.to_eigenbasis(phi1(n).amps);

  const cplx oracle_factor = std::polar(1.0, gamma) - 1.0;
  std::vector<double> costs;
  costs.reserve(std::size_t(L_max) + 1);
  auto record = [&] {
    cplx amp = 0.0;
    for (int i = 0; i < d; ++i) amp += std::conj(v0[i]) * psi[i];
    costs.push_back(1.0 - std::norm(amp));
  };
  record();  // L = 0
  for (int layer = 1; layer <= L_max; ++layer) {
    cplx proj = 0.0;
    for (int i = 0; i < d; ++i) proj += std::conj(v0[i]) * psi[i];
    for (int i = 0; i < d; ++i) psi[i] += oracle_factor * proj * v0[i];
    for (int i = 0; i < d; ++i)
      psi[i] *= std::polar(1.0, alpha * gen.eigenvalues()[i]);  // e^{+i alpha J_y}
    record();
  }
  return costs;
}

double grover_slow_cost_exact(std::span<const double> theta, double gamma, int n) {
  require_even(n, "grover_slow_cost_exact");
  if (theta.empty() || theta.size() % 4 != 0)
    throw ParityError("grover_slow_cost_exact: need a positive multiple of 4 pulses");
  const auto& gen = collective_matrix(Axis::Y, n);
  DickeVector psi = phi1(n);
  double sign = 1.0;  // leading oracle has +gamma
  for (const double th : theta) {
    psi.amps[n] *= std::polar(1.0, sign * gamma);
    gen.apply_rotation(-th, psi.amps);  // e^{+i theta J_y}
    sign = -sign;
  }
  return 1.0 - std::norm(overlap(phi2(n), psi));
}

double jxjy_cost_exact(std::span<const double> beta, std::span<const double> alpha, int n) {
  require_spin_count(n);
  if (beta.size() != alpha.size())
    throw DimensionMismatch("jxjy_cost_exact: beta/alpha length mismatch");
  const auto& gen_x = collective_matrix(Axis::X, n);
  const auto& gen_y = collective_matrix(Axis::Y, n);
  const double scale = 1.0 / std::sqrt(double(n));
  DickeVector psi = zero_state(n);
  for (std::size_t j = 0; j < beta.size(); ++j) {
    gen_y.apply_rotation(alpha[j] * scale, psi.amps);
    gen_x.apply_rotation(beta[j] * scale, psi.amps);
  }
  return std::norm(psi.amps[n]);
}

}  // namespace bpl::dicke
