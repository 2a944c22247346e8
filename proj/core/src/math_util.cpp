#include "bpl/math_util.hpp"

#include <cmath>

#include "bpl/errors.hpp"

namespace bpl {

double log_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("log_binomial: need 0 <= k <= n");
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0);
}

double binomial_over_pow2(long n, long k, long p) {
  return std::exp(log_binomial(n, k) - double(p) * std::log(2.0));
}

double central_binomial_over_pow2(long n, long p) {
  if (n % 2 != 0) throw ParityError("central_binomial_over_pow2: n must be even");
  return binomial_over_pow2(n, n / 2, p);
}

double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n <= 16) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double wrap_angle(double x, double lo) {
  double y = x - kTwoPi * std::floor((x - lo) / kTwoPi);
  if (y >= lo + kTwoPi) y = lo;  // guard the floating-point edge
  if (y < lo) y = lo;
  return y;
}

}  // namespace bpl
