#pragma once

// Tanh-sinh (double-exponential) quadrature over (0, 1) and (0, x).
//
// Integrands receive both the abscissa t and its complement 1 - t, each
// computed without cancellation. Integrands with an algebraic singularity
// at t = 1, such as (1 - t^q)^{-1/p}, should build 1 - t^q from the
// complement; the engine places abscissas within 1e-300 of a singular
// endpoint, where t itself rounds to 1.

#include <cstddef>
#include <functional>

namespace gelint::quadrature {

struct IntegrandSpec {
  // f(t, 1 - t); only ever called on the open interval.
  std::function<double(double t, double tc)> f;
  bool singular_left = false;
  bool singular_right = false;

  static IntegrandSpec unary(std::function<double(double)> g,
                             bool singular_left = false,
                             bool singular_right = false);
};

struct QuadResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Finest refinement level; level L uses step 2^-L in the transformed variable.
inline constexpr int kMaxLevel = 12;

// Converged once |S_L - S_{L-1}| <= tol + rel_tol * |S_L|. Throws
// ConvergenceError (carrying the best estimate) past kMaxLevel and
// IntegrandError on a non-finite integrand value. tol must lie in
// [1e-15, 1e-2].
QuadResult integrate_01(const IntegrandSpec& spec, double tol,
                        double rel_tol = 0.0);

// Integral over (0, x) for x in (0, 1]. For x < 1 the right endpoint is
// treated as regular.
QuadResult integrate_0x(const IntegrandSpec& spec, double x, double tol,
                        double rel_tol = 0.0);

}  // namespace gelint::quadrature
