#include "bpl/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "bpl/errors.hpp"
#include "bpl/math_util.hpp"
#include "bpl/parallel.hpp"

namespace bpl::statevec {

namespace {

void require_qubits(int n) {
  if (n < 1) throw DomainError("statevec: n must be >= 1");
  if (n > kMaxQubits) throw SizeError("statevec: n exceeds the 14-qubit limit");
}

void require_dims(const StateVector& v) {
  if (v.amps.size() != (std::size_t(1) << v.n))
    throw DimensionMismatch("statevec: amplitude vector length must be 2^n");
}

}  // namespace

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

StateVector zero_state(int n) {
  require_qubits(n);
  StateVector v{n, std::vector<cplx>(std::size_t(1) << n, 0.0)};
  v.amps[0] = 1.0;
  return v;
}

StateVector plus_state(int n) {
  require_qubits(n);
  const double a = std::pow(2.0, -0.5 * n);
  return StateVector{n, std::vector<cplx>(std::size_t(1) << n, a)};
}

StateVector product_rotation(const StateVector& state, std::span<const double> angles,
                             Axis axis) {
  require_dims(state);
  if (angles.size() != std::size_t(state.n))
    throw DimensionMismatch("product_rotation: need one angle per qubit");
  StateVector out = state;
  const std::size_t dim = out.amps.size();
  for (int q = 0; q < state.n; ++q) {
    const double half = 0.5 * angles[q];
    const double c = std::cos(half);
    const double s = std::sin(half);
    // 2x2 block of e^{-i(theta/2) sigma_axis} on (|0>, |1>).
    cplx u00, u01, u10, u11;
    switch (axis) {
      case Axis::X:
        u00 = c; u01 = cplx(0.0, -s); u10 = cplx(0.0, -s); u11 = c;
        break;
      case Axis::Y:
        u00 = c; u01 = -s; u10 = s; u11 = c;
        break;
      case Axis::Z:
        u00 = std::polar(1.0, -half); u01 = 0.0; u10 = 0.0; u11 = std::polar(1.0, half);
        break;
    }
    const std::size_t mask = std::size_t(1) << q;
    for (std::size_t b = 0; b < dim; ++b) {
      if (b & mask) continue;
      const cplx a0 = out.amps[b];
      const cplx a1 = out.amps[b | mask];
      out.amps[b] = u00 * a0 + u01 * a1;
      out.amps[b | mask] = u10 * a0 + u11 * a1;
    }
  }
  return out;
}

const RingCostDiagonal& ring_cost_diagonal(int n) {
  require_qubits(n);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const RingCostDiagonal>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto diag = std::make_unique<RingCostDiagonal>();
    diag->n = n;
    diag->values.resize(std::size_t(1) << n);
    for (std::size_t b = 0; b < diag->values.size(); ++b) {
      int disagreements = 0;
      for (int j = 0; j < n; ++j) {
        const int bj = int(b >> j) & 1;
        const int bnext = int(b >> ((j + 1) % n)) & 1;
        disagreements += (bj != bnext);
      }
      diag->values[b] = double(disagreements);
    }
    it = cache.emplace(n, std::move(diag)).first;
  }
  return *it->second;
}

StateVector ring_qaoa_state(std::span<const double> beta, std::span<const double> gamma,
                            int n) {
  if (n % 2 != 0) throw ParityError("ring_qaoa_state: n must be even");
  if (n < 4) throw SizeError("ring_qaoa_state: n must be >= 4");
  require_qubits(n);
  if (beta.size() != gamma.size())
    throw DimensionMismatch("ring_qaoa_state: beta/gamma length mismatch");
  const auto& diag = ring_cost_diagonal(n);
  StateVector psi = plus_state(n);
  for (std::size_t k = 0; k < beta.size(); ++k) {
    for (std::size_t b = 0; b < psi.amps.size(); ++b)
      psi.amps[b] *= std::polar(1.0, -gamma[k] * diag.values[b]);
    std::vector<double> angles(std::size_t(n), beta[k]);
    psi = product_rotation(psi, angles, Axis::X);
  }
  return psi;
}

double cost_ring_local(const StateVector& state) {
  require_dims(state);
  const auto& diag = ring_cost_diagonal(state.n);
  double s = 0.0;
  for (std::size_t b = 0; b < state.amps.size(); ++b)
    s += diag.values[b] * std::norm(state.amps[b]);
  return s;
}

double cost_ring_global(const StateVector& state) {
  require_dims(state);
  if (state.n % 2 != 0) throw ParityError("cost_ring_global: n must be even");
  std::size_t idx1 = 0;  // qubits 2, 4, ... excited: bits 1, 3, ...
  for (int j = 1; j < state.n; j += 2) idx1 |= std::size_t(1) << j;
  const std::size_t idx2 = ~idx1 & ((std::size_t(1) << state.n) - 1);
  return std::norm(state.amps[idx1]) + std::norm(state.amps[idx2]);
}

StateVector embed_dicke(const dicke::DickeVector& d) {
  if (d.n > kMaxQubits) throw SizeError("embed_dicke: n exceeds the 14-qubit limit");
  if (d.amps.size() != std::size_t(d.n) + 1)
    throw DimensionMismatch("embed_dicke: amplitude vector length must be n+1");
  StateVector out{d.n, std::vector<cplx>(std::size_t(1) << d.n, 0.0)};
  std::vector<double> inv_sqrt_binom(std::size_t(d.n) + 1);
  for (int k = 0; k <= d.n; ++k)
    inv_sqrt_binom[k] = std::exp(-0.5 * log_binomial(d.n, k));
  for (std::size_t b = 0; b < out.amps.size(); ++b) {
    const int k = std::popcount(b);
    out.amps[b] = d.amps[std::size_t(d.n - k)] * inv_sqrt_binom[k];
  }
  return out;
}

std::complex<double> overlap(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw DimensionMismatch("overlap: qubit counts differ");
  require_dims(a);
  require_dims(b);
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

namespace {

double correlated_local_cost(int n, int L, double beta, double gamma) {
  const std::vector<double> betas(std::size_t(L), beta);
  const std::vector<double> gammas(std::size_t(L), gamma);
  return cost_ring_local(ring_qaoa_state(betas, gammas, n));
}

}  // namespace

QaoaMaximum maximize_correlated_qaoa(int n, int L, int grid, int refinements) {
  if (n < 4 || n > 10) throw SizeError("maximize_correlated_qaoa: need 4 <= n <= 10");
  if (L < 1 || L > 6) throw SizeError("maximize_correlated_qaoa: need 1 <= L <= 6");
  if (grid < 2) throw DomainError("maximize_correlated_qaoa: grid must be >= 2");

  const double beta_lo = -kPi, beta_w = kTwoPi;
  const double gamma_lo = 0.0, gamma_w = 0.5 * kPi;
  const double dbeta = beta_w / grid;
  const double dgamma = gamma_w / grid;

  // Coarse pass: evaluate every cell by index, then scan in ascending
  // (beta, gamma) order so ties break toward the lexicographically smaller
  // point regardless of the worker count.
  std::vector<double> values(std::size_t(grid) * grid);
  parallel_for(values.size(), [&](std::size_t idx) {
    const int i = int(idx) / grid;
    const int j = int(idx) % grid;
    values[idx] = correlated_local_cost(n, L, beta_lo + i * dbeta, gamma_lo + j * dgamma);
  });
  // The landscape grows oscillatory with depth, so a single hill climb from
  // the best coarse cell can stall on a secondary ridge. Refine from the
  // strongest coarse cells instead and keep the best refined point.
  constexpr std::size_t kRefineStarts = 32;
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });
  const std::size_t starts = std::min(kRefineStarts, order.size());

  const double gamma_hi = gamma_w * (1.0 - 1e-12);
  auto refine = [&](std::size_t idx) {
    double beta = beta_lo + double(idx / std::size_t(grid)) * dbeta;
    double gamma = gamma_lo + double(idx % std::size_t(grid)) * dgamma;
    double value = values[idx];
    // Coordinate descent with halving steps.
    double step_b = 0.5 * dbeta;
    double step_g = 0.5 * dgamma;
    for (int pass = 0; pass < refinements; ++pass) {
      if (std::max(step_b, step_g) < 1e-6) break;
      for (int moves = 0; moves < 100; ++moves) {
        double cand_beta = beta, cand_gamma = gamma, cand_value = value;
        const double beta_opts[2] = {wrap_angle(beta - step_b, beta_lo),
                                     wrap_angle(beta + step_b, beta_lo)};
        for (const double b : beta_opts) {
          const double v = correlated_local_cost(n, L, b, gamma);
          if (v > cand_value) { cand_value = v; cand_beta = b; cand_gamma = gamma; }
        }
        const double gamma_opts[2] = {std::max(gamma_lo, gamma - step_g),
                                      std::min(gamma_hi, gamma + step_g)};
        for (const double g : gamma_opts) {
          const double v = correlated_local_cost(n, L, beta, g);
          if (v > cand_value) { cand_value = v; cand_beta = beta; cand_gamma = g; }
        }
        if (cand_value <= value) break;
        beta = cand_beta;
        gamma = cand_gamma;
        value = cand_value;
      }
      step_b *= 0.5;
      step_g *= 0.5;
    }
    return QaoaMaximum{beta, gamma, value};
  };

  QaoaMaximum best = refine(order[0]);
  for (std::size_t s = 1; s < starts; ++s) {
    const QaoaMaximum cand = refine(order[s]);
    const bool wins =
        cand.value > best.value ||
        (cand.value == best.value &&
         (cand.beta < best.beta ||
          (cand.beta == best.beta && cand.gamma < best.gamma)));
    if (wins) best = cand;
  }
  return best;
}

}  // namespace bpl::statevec
