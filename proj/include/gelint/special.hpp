#pragma once

#include "gelint/params.hpp"

namespace gelint {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), evaluated in log space.
double beta(double x, double y);

// pi_{p,q} = 2 int_0^1 (1 - t^q)^{-1/p} dt = (2/q) B(1/q, 1/p*).
// pi_{inf,q} is exactly 2.
double pi_pq(const Exponent& p, double q);

}  // namespace gelint
