#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "bpl/correlation.hpp"

namespace bpl {

// The parameterized cost functions the estimators and the CLI know about.
// Families ending in "linear" or evaluated through small-angle closed forms
// document that in evaluate_cost (estimator.hpp).
enum class FamilyTag {
  SeparablePure,         // product of single-spin rotations, pure start state
  SeparableMixed,        // same with per-spin depolarized start state
  SeparableLocal,        // single-spin observable variant
  JxJyAsymptotic,        // alternating collective X/Y rotations, 1/sqrt(n) angles
  XiSeparableM1,         // xi independent blocks, one Haar layer
  GroverSlowGeneral,     // slow-oracle alternating pulse sequence, free angles
  GroverSlowCorrelated,  // slow-oracle sequence with one shared angle
  GroverExact,           // exact-oracle sequence with one shared angle
  RodLocal,              // ring-of-disagrees, local cost, linearized in gamma
  RodGlobal,             // ring-of-disagrees, global cost, linearized in gamma
};

// Identifies one concrete cost function: the family plus its size and any
// fixed scalar knobs. gamma/delta/xi are only read by families that use them
// (gamma: oracle or driver strength; delta: depolarization; xi: block count).
struct CostFamily {
  FamilyTag tag = FamilyTag::SeparablePure;
  int n = 1;          // number of spins / qubits
  int L = 1;          // number of layers
  double gamma = 0.0;
  double delta = 0.0;
  int xi = 1;

  // Throws ParityError (families needing even n), DomainError (bad n, L,
  // gamma, delta, xi ranges).
  void validate() const;

  // Domain each free angle is drawn from. Periodic domains are sampled and
  // tested half-open [lower, lower + width).
  AngleDomain domain() const;

  // Number of underlying parameter slots M (before grouping).
  std::size_t parameter_count() const;

  // True if gradient() supports GradientMethod::Analytic for this family.
  bool has_analytic_derivative() const;

  // Stable name used in CSV output, e.g. "separable-pure".
  std::string_view name() const;
};

// Parse a family name as printed by CostFamily::name(). Throws ConfigError
// on unknown names.
FamilyTag family_from_name(std::string_view name);

enum class MomentTarget {
  Cost,               // per-sample value: C
  Derivative,         // per-sample value: dC (primary estimate: its variance)
  DerivativeSquared,  // per-sample value: (dC)^2
  AbsDerivative,      // per-sample value: |dC|
};

std::string_view target_name(MomentTarget t);

// Result of a Monte Carlo (or quadrature) moment estimate. mean and
// second_moment are moments of the per-sample target value t. For
// Derivative targets the primary estimate is `variance`; when
// zero_mean_symmetry is set the exact-zero mean is used (variance =
// second_moment), otherwise the unbiased sample variance. std_err is the
// standard error of the primary estimate: sd(t)/sqrt(N) for
// Cost/DerivativeSquared/AbsDerivative, sd(t^2)/sqrt(N) for Derivative.
struct EstimateRecord {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
  double std_err = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  CostFamily family;
  MomentTarget target = MomentTarget::Cost;
  bool zero_mean_symmetry = false;
};

}  // namespace bpl
