#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bpl {

enum class CorrelationKind {
  Uncorrelated,         // every parameter independent (M groups)
  PerfectlyCorrelated,  // one shared value (1 group)
  LayerCorrelated,      // explicit partition of parameter indices
};

// A partition of the M parameter slots of a circuit into groups that share
// one sampled value. Group indices are 0-based.
class CorrelationScheme {
 public:
  static CorrelationScheme uncorrelated(std::size_t m);
  static CorrelationScheme perfectly_correlated(std::size_t m);
  // groups must partition {0, ..., m-1}; throws InvalidScheme otherwise.
  static CorrelationScheme layer_correlated(std::size_t m,
                                            std::vector<std::vector<std::size_t>> groups);

  CorrelationKind kind() const { return kind_; }
  std::size_t parameter_count() const { return m_; }
  std::size_t group_count() const { return groups_.size(); }
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }

 private:
  CorrelationScheme(CorrelationKind kind, std::size_t m,
                    std::vector<std::vector<std::size_t>> groups);
  CorrelationKind kind_;
  std::size_t m_;
  std::vector<std::vector<std::size_t>> groups_;
};

// Interval of valid angles; periodic means lower and upper are identified.
struct AngleDomain {
  double lower = 0.0;
  double upper = 0.0;
  bool periodic = true;
  double width() const { return upper - lower; }
  bool contains(double x) const;
};

// Map per-group values to the full length-M parameter vector. If values
// already has length M it is validated (group members must agree exactly)
// and returned unchanged. Throws InvalidScheme on any other length or on
// disagreement within a group.
std::vector<double> expand(const CorrelationScheme& scheme, std::span<const double> values);

// A drawn set of angles: per-group values plus the scheme and domain they
// were drawn under.
struct AngleSample {
  std::vector<double> values;  // length == scheme.group_count()
  CorrelationScheme scheme;
  AngleDomain domain;

  std::vector<double> expanded() const { return expand(scheme, values); }
};

}  // namespace bpl
