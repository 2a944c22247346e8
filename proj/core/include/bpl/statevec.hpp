#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bpl/dicke.hpp"

namespace bpl::statevec {

// Full 2^n statevector simulator, the ground-truth oracle for the collective
// simulator and home of the ring-of-disagrees circuits. Conventions:
//   * computational basis index b stores qubit j in bit j-1; |0...0> is
//     index 0; sigma_z |0> = +|0>.
//   * product_rotation applies e^{-i (theta_j/2) sigma_axis} per qubit, so
//     equal angles theta reproduce the collective e^{-i theta J_axis}.
// Maximum n is 14 (SizeError above).

inline constexpr int kMaxQubits = 14;

using cplx = std::complex<double>;
using dicke::Axis;

struct StateVector {
  int n = 0;
  std::vector<cplx> amps;  // length 2^n

  double norm() const;
};

// |0...0>.
StateVector zero_state(int n);

// Uniform superposition ((|0>+|1>)/sqrt(2))^{x n}, the maximal J_x
// eigenvector.
StateVector plus_state(int n);

// Apply e^{-i (angles[j]/2) sigma_axis} to qubit j+1 for every j.
// DimensionMismatch unless angles.size() == n.
StateVector product_rotation(const StateVector& state, std::span<const double> angles,
                             Axis axis);

// Diagonal of the ring cost operator n/2 - (1/2) sum_j sz_j sz_{j+1}
// (periodic): values[b] counts the disagreeing neighbor pairs of bitstring
// b. Integer-valued, in {0..n}; the two alternating bitstrings attain n.
struct RingCostDiagonal {
  int n = 0;
  std::vector<double> values;  // length 2^n
};

// Shared immutable diagonal for n, built once and cached.
const RingCostDiagonal& ring_cost_diagonal(int n);

// Alternating circuit on the ring: from plus_state(n), for k = 1..L apply
// the diagonal e^{-i gamma_k C} then the mixer e^{-i beta_k J_x} (equal
// per-qubit angle beta_k). Even n, 4 <= n <= 14 (ParityError/SizeError);
// beta and gamma must have equal length (DimensionMismatch).
StateVector ring_qaoa_state(std::span<const double> beta, std::span<const double> gamma,
                            int n);

// <state| C |state> in [0, n].
double cost_ring_local(const StateVector& state);

// |<psi1|state>|^2 + |<psi2|state>|^2 where psi1/psi2 are the two
// alternating bitstrings (the degenerate ring-cost maximizers). Even n
// (ParityError).
double cost_ring_global(const StateVector& state);

// Symmetric-subspace embedding: every bitstring with k ones gets amplitude
// d.amps[n-k]/sqrt(C(n,k)). SizeError if d.n > 14.
StateVector embed_dicke(const dicke::DickeVector& d);

std::complex<double> overlap(const StateVector& a, const StateVector& b);

// Best local ring cost over one shared mixer angle beta in [-pi, pi) and
// one shared driver angle gamma in [0, pi/2): deterministic grid x grid
// coarse search followed by coordinate-descent refinement (step halves each
// pass, stops below 1e-6; `refinements` caps the passes). Ties broken
// toward lexicographically smaller (beta, gamma). 4 <= n <= 10, 1 <= L <= 6
// (SizeError).
struct QaoaMaximum {
  double beta = 0.0;
  double gamma = 0.0;
  double value = 0.0;
};
QaoaMaximum maximize_correlated_qaoa(int n, int L, int grid = 64, int refinements = 40);

}  // namespace bpl::statevec
