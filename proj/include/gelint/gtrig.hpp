#pragma once

// Generalized trigonometric functions. sin_{p,q} is the inverse of
//   arcsin_{p,q}(x) = int_0^x (1 - t^q)^{-1/p} dt     (= x when p = inf)
// and maps [0, pi_{p,q}/2] increasingly onto [0, 1]. For p != inf,
// cos_{p,q} = (sin_{p,q})' = (1 - sin_{p,q}^q)^{1/p}.

#include "gelint/params.hpp"

namespace gelint {

struct GTrigParams {
  Exponent p = Exponent::infinity();
  double q = 2.0;
  double half_period = 1.0;  // pi_{p,q} / 2

  // Throws DomainError for q <= 1.
  static GTrigParams make(const Exponent& p, double q);
};

// Throws DomainError for x outside [0, 1].
double arcsin_pq(const GTrigParams& params, double x);

// Inverse of arcsin_pq by safeguarded Newton iteration with a bisection
// fallback. Throws DomainError for theta outside [0, half_period] and
// ConvergenceError if the bracket fails to close.
double sin_pq(const GTrigParams& params, double theta);

// Throws DomainError for p = inf, for theta outside [0, half_period], and for
// theta = half_period when p < 0 (cos_{p,q} blows up there).
double cos_pq(const GTrigParams& params, double theta);

}  // namespace gelint
