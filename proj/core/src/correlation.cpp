#include "bpl/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bpl/errors.hpp"
#include "bpl/math_util.hpp"

namespace bpl {

CorrelationScheme::CorrelationScheme(CorrelationKind kind, std::size_t m,
                                     std::vector<std::vector<std::size_t>> groups)
    : kind_(kind), m_(m), groups_(std::move(groups)) {}

CorrelationScheme CorrelationScheme::uncorrelated(std::size_t m) {
  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t i = 0; i < m; ++i) groups[i] = {i};
  return CorrelationScheme(CorrelationKind::Uncorrelated, m, std::move(groups));
}

CorrelationScheme CorrelationScheme::perfectly_correlated(std::size_t m) {
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return CorrelationScheme(CorrelationKind::PerfectlyCorrelated, m, {std::move(all)});
}

CorrelationScheme CorrelationScheme::layer_correlated(
    std::size_t m, std::vector<std::vector<std::size_t>> groups) {
  std::vector<bool> seen(m, false);
  std::size_t covered = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw InvalidScheme("layer_correlated: empty group");
    for (std::size_t idx : g) {
      if (idx >= m) throw InvalidScheme("layer_correlated: index out of range");
      if (seen[idx]) throw InvalidScheme("layer_correlated: index appears twice");
      seen[idx] = true;
      ++covered;
    }
  }
  if (covered != m) throw InvalidScheme("layer_correlated: groups do not cover all slots");
  return CorrelationScheme(CorrelationKind::LayerCorrelated, m, std::move(groups));
}

bool AngleDomain::contains(double x) const {
  if (periodic) return x >= lower && x < upper;
  return x >= lower && x <= upper;
}

std::vector<double> expand(const CorrelationScheme& scheme, std::span<const double> values) {
  const std::size_t m = scheme.parameter_count();
  if (values.size() == scheme.group_count()) {
    std::vector<double> full(m, 0.0);
    for (std::size_t g = 0; g < scheme.group_count(); ++g)
      for (std::size_t idx : scheme.groups()[g]) full[idx] = values[g];
    return full;
  }
  if (values.size() == m) {
    for (const auto& group : scheme.groups())
      for (std::size_t idx : group)
        if (values[idx] != values[group.front()])
          throw InvalidScheme("expand: full-length vector disagrees within a group");
    return std::vector<double>(values.begin(), values.end());
  }
  throw InvalidScheme("expand: length matches neither group count nor parameter count");
}

}  // namespace bpl
