#pragma once

#include <cstddef>

namespace gelint {

struct Hyp2F1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double x = 0.0;  // in [0, 1)
};

// Series terms beyond this count raise ConvergenceError.
inline constexpr std::size_t kHyp2F1TermCap = 1'000'000;

// term_{n+1} = term_n (a+n)(b+n) x / ((c+n)(n+1)). Exactly zero once a+n or
// b+n hits zero.
double pochhammer_ratio_step(double term, double a, double b, double c,
                             std::size_t n, double x) noexcept;

// Gauss hypergeometric F(a, b; c; x) by forward summation of its power series,
// stopped when the ratio-test bound on the tail drops below tol * |sum|.
// Throws DomainError for c at a pole (0, -1, -2, ... within 1e-12) or x
// outside [0, 1), and ConvergenceError past kHyp2F1TermCap terms.
double gauss_2f1(const Hyp2F1Params& params, double tol);

}  // namespace gelint
