#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bpl::dicke {

// Sign and basis conventions used by every routine in this module:
//   * Dicke amplitudes are indexed by m = -n/2 ... +n/2 in ascending order,
//     so amps[i] belongs to m = i - n/2 and |0...0> (sigma_z = +1 on every
//     qubit) sits at index n.
//   * rotate(state, axis, angle) applies e^{-i angle J_axis}; circuits
//     written with e^{+i theta J_y} therefore call rotate(Y, -theta).
//   * oracle_phase multiplies the |0...0> amplitude by e^{+i gamma}.
//   * phi1 uses the coherent-superposition gauge in which <0...0|phi1> =
//     sqrt(2) 2^{-n/2} > 0 (pinned by tests).
// Maximum n is 128 (dimension 129); larger n throws SizeError.

inline constexpr int kMaxSpins = 128;

enum class Axis { X, Y, Z };

using cplx = std::complex<double>;

// State in the (n+1)-dimensional symmetric subspace of n qubits.
struct DickeVector {
  int n = 0;
  std::vector<cplx> amps;  // length n+1, index i <-> m = i - n/2

  double norm() const;
};

// Collective spin component J_axis = (1/2) sum_j sigma_axis^{(j)} on the
// symmetric subspace, with its cached eigensystem. Hermitian; spectrum is
// exactly {-n/2, ..., n/2} (eigenvalues snapped to half-integers).
class CollectiveGenerator {
 public:
  CollectiveGenerator(Axis axis, int n);

  Axis axis() const { return axis_; }
  int n() const { return n_; }
  int dim() const { return n_ + 1; }

  // Dense matrix element <i|J|j> (tridiagonal for X/Y, diagonal for Z).
  cplx matrix_element(int i, int j) const;

  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  // Column-major (n+1) x (n+1): eigenvector k occupies entries
  // [k*(n+1), (k+1)*(n+1)).
  const std::vector<cplx>& eigenvectors() const { return eigenvectors_; }

  // In-place e^{-i angle J} on a length-(n+1) amplitude vector.
  void apply_rotation(double angle, std::span<cplx> amps) const;

  // V^dagger x (change to the eigenbasis) and V y (back).
  std::vector<cplx> to_eigenbasis(std::span<const cplx> amps) const;
  std::vector<cplx> from_eigenbasis(std::span<const cplx> amps) const;

 private:
  Axis axis_;
  int n_;
  std::vector<double> eigenvalues_;
  std::vector<cplx> eigenvectors_;
};

// Shared immutable generator for (axis, n), built once and cached.
const CollectiveGenerator& collective_matrix(Axis axis, int n);

// |0...0>^{(n)}: unit amplitude at m = +n/2.
DickeVector zero_state(int n);

// e^{-i angle J_axis} |state>. Throws DimensionMismatch if sizes disagree.
DickeVector rotate(const DickeVector& state, Axis axis, double angle);

// e^{+i gamma |0><0|^n} |state>: multiplies the m = +n/2 amplitude by
// e^{i gamma}.
DickeVector oracle_phase(const DickeVector& state, double gamma);

std::complex<double> overlap(const DickeVector& a, const DickeVector& b);

// Equal superposition of the two extremal J_y eigenvectors, built as
// (|z=+i> + |z=-i>)/sqrt(2) so the amplitudes are exact and the gauge fixed
// (<0...0|phi1> = sqrt(2) 2^{-n/2}). Requires even n >= 2 (ParityError).
DickeVector phi1(int n);

// The zero eigenvector of J_y, phase fixed by making its largest-magnitude
// component real positive. |<0...0|phi2>|^2 = C(n, n/2)/2^n. Requires even
// n >= 2 (ParityError).
DickeVector phi2(int n);

// Spin coherent state (1+|z|^2)^{-n/2} e^{z J_-} |0...0>; z = 0 gives
// |0...0>.
DickeVector coherent_state(cplx z, int n);

// Closed-form inner product <z|zp> =
// ((1+|z|^2)(1+|zp|^2))^{-n/2} (1 + conj(z) zp)^n.
cplx coherent_overlap(cplx z, cplx zp, int n);

// Label of the rotated coherent state: rotate(|z>, Y, -2a) = |result> up to
// global phase, result = (z cos|a| - s sin|a|) / (z s sin|a| + cos|a|) with
// s = a/|a| (s = 1 at a = 0). Throws PoleError when the denominator
// vanishes (the rotated state leaves the chart).
cplx rotated_coherent_parameter(cplx z, double a);

// Cost of the exact-oracle sequence: starting from phi1, L layers of
// oracle_phase(gamma) followed by e^{+i alpha J_y}; returns
// 1 - |<0...0|final>|^2. Implemented in the J_y eigenbasis (O(L n) per
// layer after the cached diagonalization). Even n only (ParityError).
double grover_cost_exact(double alpha, double gamma, int n, int L);

// Costs for every L = 0..L_max of the same sweep, computed incrementally.
std::vector<double> grover_cost_exact_sweep(double alpha, double gamma, int n, int L_max);

// Cost of the slow-oracle sequence: gates applied in the order
// e^{+i gamma C}, e^{+i theta_1 J_y}, e^{-i gamma C}, e^{+i theta_2 J_y},
// ... (oracle sign alternating, +gamma first), C = |0><0|^n; returns
// 1 - |<phi2|final>|^2. Even n and theta.size() % 4 == 0 (ParityError).
double grover_slow_cost_exact(std::span<const double> theta, double gamma, int n);

// Fidelity |<0...0| R |0...0>|^2 of the alternating collective circuit with
// per-layer angles beta_j/sqrt(n) about X and alpha_j/sqrt(n) about Y (Y
// applied first within a layer). Sequences must have equal length
// (DimensionMismatch).
double jxjy_cost_exact(std::span<const double> beta, std::span<const double> alpha, int n);

}  // namespace bpl::dicke
