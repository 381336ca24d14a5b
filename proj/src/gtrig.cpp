#include "gelint/gtrig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gelint/errors.hpp"
#include "gelint/quadrature.hpp"
#include "gelint/special.hpp"
#include "kernels.hpp"

namespace gelint {

namespace {

constexpr double kArcsinTol = 1e-15;
constexpr double kThetaTol = 1e-12;
// Above this x the Newton derivative (1 - x^q)^{-1/p} degenerates.
constexpr double kBisectionZone = 1.0 - 1e-8;
constexpr int kMaxIterations = 200;

}  // namespace

GTrigParams GTrigParams::make(const Exponent& p, double q) {
  return GTrigParams{p, q, pi_pq(p, q) / 2.0};
}

double arcsin_pq(const GTrigParams& prm, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("x", "arcsin_pq requires x in [0, 1]");
  }
  if (prm.p.is_infinite()) return x;
  if (x == 0.0) return 0.0;
  if (x == 1.0) return prm.half_period;

  const double ip = prm.p.reciprocal();
  const double q = prm.q;
  quadrature::IntegrandSpec spec{
      [ip, q](double t, double tc) {
        return std::pow(detail::one_minus_pow(t, tc, q), -ip);
      },
      false, ip > 0.0};
  return quadrature::integrate_0x(spec, x, kArcsinTol, kArcsinTol).value;
}

double sin_pq(const GTrigParams& prm, double theta) {
  const double hp = prm.half_period;
  if (!(theta >= 0.0 && theta <= hp)) {
    throw DomainError("theta", "sin_pq requires theta in [0, pi_pq/2]");
  }
  if (prm.p.is_infinite()) return theta;
  if (theta == 0.0) return 0.0;
  if (theta == hp) return 1.0;

  const double ip = prm.p.reciprocal();
  const double q = prm.q;

  // arcsin_pq is convex for p > 1 and concave for p < 0, which pins the root
  // between theta/hp and theta.
  double lo = std::min(theta / hp, theta);
  double hi = std::min(std::max(theta / hp, theta), 1.0);
  double x = 0.5 * (lo + hi);
  lo = std::max(0.0, lo - 1e-15);
  hi = std::min(1.0, hi + 1e-15);

  for (int it = 0; it < kMaxIterations; ++it) {
    const double residual = arcsin_pq(prm, x) - theta;
    if (residual < 0.0) lo = x;
    if (residual > 0.0) hi = x;

    const bool newton_zone = x <= kBisectionZone;
    // d/dx arcsin_pq(x) = (1 - x^q)^{-1/p}
    const double step =
        newton_zone ? -residual * std::pow(1.0 - std::pow(x, q), ip) : 0.0;
    const double proposal = x + step;
    const bool proposal_ok = newton_zone && proposal > lo && proposal < hi;

    if (std::abs(residual) <= kThetaTol) {
      // The last Newton correction is free and squares the error.
      return proposal_ok ? proposal : x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) {
      return 0.5 * (lo + hi);
    }
    x = proposal_ok ? proposal : 0.5 * (lo + hi);
  }
  throw ConvergenceError("sin_pq inversion did not converge", x, hi - lo);
}

double cos_pq(const GTrigParams& prm, double theta) {
  if (prm.p.is_infinite()) {
    throw DomainError("p", "cos_pq is defined only for p != inf");
  }
  const double hp = prm.half_period;
  if (!(theta >= 0.0 && theta <= hp)) {
    throw DomainError("theta", "cos_pq requires theta in [0, pi_pq/2]");
  }
  const double ip = prm.p.reciprocal();
  if (theta == 0.0) return 1.0;
  if (theta == hp) {
    if (ip < 0.0) {
      throw DomainError("theta", "cos_pq is unbounded at pi_pq/2 for p < 0");
    }
    return 0.0;
  }
  const double s = sin_pq(prm, theta);
  // 1 - s^q computed as -expm1(q log s) to keep relative accuracy near s = 1.
  const double c = s > 0.5 ? -std::expm1(prm.q * std::log(s)) : 1.0 - std::pow(s, prm.q);
  return std::pow(c, ip);
}

}  // namespace gelint
