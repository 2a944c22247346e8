#pragma once

#include <cstddef>
#include <span>

namespace bpl {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// log C(n, k); exact-ish via lgamma. Throws DomainError for k < 0 or k > n.
double log_binomial(long n, long k);

// C(n, k) / 2^p computed in log space; safe for n in the hundreds.
double binomial_over_pow2(long n, long k, long p);

// C(n, n/2) / 2^p for even n. Throws ParityError on odd n.
double central_binomial_over_pow2(long n, long p);

// Pairwise (tree) summation. The result depends only on the order of the
// elements, never on how callers later split work across threads.
double pairwise_sum(std::span<const double> xs);

// Wrap x into [lo, lo + 2*pi).
double wrap_angle(double x, double lo);

}  // namespace bpl
