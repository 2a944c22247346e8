#pragma once

#include <stdexcept>
#include <string>

namespace bpl {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A correlation scheme whose groups are not a partition of {0..M-1}, or an
// angle vector whose length matches neither the group count nor M.
struct InvalidScheme : Error {
  using Error::Error;
};

// A value lies outside the domain a function is defined on.
struct DomainError : Error {
  using Error::Error;
};

// An integer that must be even (or otherwise of fixed parity) is not.
struct ParityError : Error {
  using Error::Error;
};

// Two containers that must have matching lengths do not.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A size limit was exceeded (e.g. too many spins for a dense simulator).
struct SizeError : Error {
  using Error::Error;
};

// A closed-form transform was evaluated at one of its poles.
struct PoleError : Error {
  using Error::Error;
};

// A statistical routine was called with too few samples or data points.
struct PreconditionError : Error {
  using Error::Error;
};

// A fit was requested on data that cannot support it (too few points after
// filtering, or non-positive values on a log scale).
struct InsufficientData : Error {
  using Error::Error;
};

// A value that must be strictly positive (e.g. data fitted on a log scale)
// is zero or negative.
struct NonPositive : Error {
  using Error::Error;
};

// Derived quantities were combined across incompatible fit models.
struct ModelMismatch : Error {
  using Error::Error;
};

// An analytic derivative was requested for a family that has none.
struct NoAnalytic : Error {
  using Error::Error;
};

// Command-line / config-file validation failure (CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

// Filesystem failure writing outputs (CLI exit code 3).
struct IoError : Error {
  using Error::Error;
};

}  // namespace bpl
