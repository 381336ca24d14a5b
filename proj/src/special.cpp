#include "gelint/special.hpp"

#include <cmath>
#include <numbers>

#include "gelint/errors.hpp"

namespace gelint {

namespace {

// Past this point tgamma overflows binary64; the Stirling series is already
// at full precision there.
constexpr double kStirlingCutoff = 170.0;

double stirling_log_gamma(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli terms B_{2n} / (2n (2n-1) x^{2n-1}), n = 1..5.
  const double series =
      inv * (1.0 / 12.0 -
             inv2 * (1.0 / 360.0 -
                     inv2 * (1.0 / 1260.0 -
                             inv2 * (1.0 / 1680.0 - inv2 * (1.0 / 1188.0)))));
  return (x - 0.5) * std::log(x) - x +
         0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("x", "log_gamma requires a finite x > 0");
  }
  // std::lgamma writes the global signgam on glibc; tgamma has no such state.
  if (x < kStirlingCutoff) return std::log(std::tgamma(x));
  return stirling_log_gamma(x);
}

double beta(double x, double y) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x", "beta requires x > 0");
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("y", "beta requires y > 0");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double pi_pq(const Exponent& p, double q) {
  if (!std::isfinite(q) || q <= 1.0) throw DomainError("q", "must be > 1");
  if (p.is_infinite()) return 2.0;
  return 2.0 / q * beta(1.0 / q, 1.0 - p.reciprocal());
}

}  // namespace gelint
