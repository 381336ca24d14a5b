#pragma once

#include <cmath>

namespace gelint::detail {

// 1 - t^q given t and tc = 1 - t, without cancellation near t = 1.
inline double one_minus_pow(double t, double tc, double q) noexcept {
  if (t > 0.5) return -std::expm1(q * std::log1p(-tc));
  return 1.0 - std::pow(t, q);
}

// (base)^e with the convention that e == 0 yields exactly 1, so the p = inf
// weight (1 - t^q)^{-1/p} disappears from the integrands.
inline double pow_or_one(double base, double e) noexcept {
  return e == 0.0 ? 1.0 : std::pow(base, e);
}

}  // namespace gelint::detail
