#include "bpl/cost_family.hpp"

#include <string>

#include "bpl/errors.hpp"
#include "bpl/math_util.hpp"

namespace bpl {

namespace {

bool needs_even_n(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::GroverSlowGeneral:
    case FamilyTag::GroverSlowCorrelated:
    case FamilyTag::GroverExact:
    case FamilyTag::RodGlobal:
      return true;
    default:
      return false;
  }
}

}  // namespace

void CostFamily::validate() const {
  if (n < 1) throw DomainError("CostFamily: n must be >= 1");
  if (L < 0) throw DomainError("CostFamily: L must be >= 0");
  if (needs_even_n(tag) && n % 2 != 0)
    throw ParityError(std::string(name()) + ": n must be even");
  switch (tag) {
    case FamilyTag::SeparablePure:
    case FamilyTag::SeparableLocal:
      if (L < 1) throw DomainError("CostFamily: L must be >= 1");
      break;
    case FamilyTag::SeparableMixed:
      if (L < 1) throw DomainError("CostFamily: L must be >= 1");
      if (delta < 0.0 || delta >= 0.5)
        throw DomainError("separable-mixed: delta must lie in [0, 1/2)");
      break;
    case FamilyTag::JxJyAsymptotic:
      if (L < 1) throw DomainError("CostFamily: L must be >= 1");
      break;
    case FamilyTag::XiSeparableM1:
      if (xi < 1) throw DomainError("xi-separable-m1: xi must be >= 1");
      if (delta < 0.0 || delta >= 0.5)
        throw DomainError("xi-separable-m1: delta must lie in [0, 1/2)");
      break;
    case FamilyTag::GroverSlowGeneral:
    case FamilyTag::GroverSlowCorrelated:
      if (L < 1 || L % 4 != 0)
        throw ParityError(std::string(name()) + ": L must be a positive multiple of 4");
      break;
    case FamilyTag::GroverExact:
      break;  // L = 0 allowed (bare initial state)
    case FamilyTag::RodLocal:
      if (n < 3) throw DomainError("rod-local: n must be >= 3 (ring)");
      if (L < 1) throw DomainError("CostFamily: L must be >= 1");
      if (gamma < 0.0 || gamma >= kPi / 2)
        throw DomainError("rod-local: gamma must lie in [0, pi/2)");
      break;
    case FamilyTag::RodGlobal:
      if (n < 4) throw DomainError("rod-global: n must be >= 4");
      if (L < 1) throw DomainError("CostFamily: L must be >= 1");
      if (gamma < 0.0 || gamma >= kPi / 2)
        throw DomainError("rod-global: gamma must lie in [0, pi/2)");
      break;
  }
}

AngleDomain CostFamily::domain() const {
  switch (tag) {
    case FamilyTag::SeparablePure:
    case FamilyTag::SeparableMixed:
    case FamilyTag::SeparableLocal:
    case FamilyTag::JxJyAsymptotic:
    case FamilyTag::RodLocal:
    case FamilyTag::RodGlobal:
      return AngleDomain{-kPi, kPi, true};
    case FamilyTag::GroverSlowGeneral:
    case FamilyTag::GroverSlowCorrelated:
    case FamilyTag::GroverExact:
      return AngleDomain{0.0, kTwoPi, true};
    case FamilyTag::XiSeparableM1:
      return AngleDomain{0.0, 0.0, false};  // no angle parameters
  }
  return AngleDomain{};
}

std::size_t CostFamily::parameter_count() const {
  switch (tag) {
    case FamilyTag::SeparablePure:
    case FamilyTag::SeparableMixed:
    case FamilyTag::SeparableLocal:
    case FamilyTag::GroverSlowGeneral:
    case FamilyTag::RodLocal:
      return static_cast<std::size_t>(L);
    case FamilyTag::JxJyAsymptotic:
      return static_cast<std::size_t>(2 * L);
    case FamilyTag::GroverSlowCorrelated:
    case FamilyTag::GroverExact:
    case FamilyTag::RodGlobal:
      return 1;
    case FamilyTag::XiSeparableM1:
      return 0;
  }
  return 0;
}

bool CostFamily::has_analytic_derivative() const {
  switch (tag) {
    case FamilyTag::SeparablePure:
    case FamilyTag::SeparableMixed:
    case FamilyTag::SeparableLocal:
    case FamilyTag::GroverSlowGeneral:
    case FamilyTag::GroverSlowCorrelated:
    case FamilyTag::RodLocal:
    case FamilyTag::RodGlobal:
      return true;
    case FamilyTag::JxJyAsymptotic:
    case FamilyTag::GroverExact:
    case FamilyTag::XiSeparableM1:
      return false;
  }
  return false;
}

std::string_view CostFamily::name() const {
  switch (tag) {
    case FamilyTag::SeparablePure: return "separable-pure";
    case FamilyTag::SeparableMixed: return "separable-mixed";
    case FamilyTag::SeparableLocal: return "separable-local";
    case FamilyTag::JxJyAsymptotic: return "jxjy";
    case FamilyTag::XiSeparableM1: return "xi-separable-m1";
    case FamilyTag::GroverSlowGeneral: return "grover-slow-general";
    case FamilyTag::GroverSlowCorrelated: return "grover-slow-correlated";
    case FamilyTag::GroverExact: return "grover-exact";
    case FamilyTag::RodLocal: return "rod-local";
    case FamilyTag::RodGlobal: return "rod-global";
  }
  return "unknown";
}

FamilyTag family_from_name(std::string_view name) {
  if (name == "separable-pure") return FamilyTag::SeparablePure;
  if (name == "separable-mixed") return FamilyTag::SeparableMixed;
  if (name == "separable-local") return FamilyTag::SeparableLocal;
  if (name == "jxjy") return FamilyTag::JxJyAsymptotic;
  if (name == "xi-separable-m1") return FamilyTag::XiSeparableM1;
  if (name == "grover-slow-general") return FamilyTag::GroverSlowGeneral;
  if (name == "grover-slow-correlated") return FamilyTag::GroverSlowCorrelated;
  if (name == "grover-exact") return FamilyTag::GroverExact;
  if (name == "rod-local") return FamilyTag::RodLocal;
  if (name == "rod-global") return FamilyTag::RodGlobal;
  throw ConfigError("unknown cost family: " + std::string(name));
}

std::string_view target_name(MomentTarget t) {
  switch (t) {
    case MomentTarget::Cost: return "cost";
    case MomentTarget::Derivative: return "derivative";
    case MomentTarget::DerivativeSquared: return "derivative-squared";
    case MomentTarget::AbsDerivative: return "abs-derivative";
  }
  return "unknown";
}

}  // namespace bpl
