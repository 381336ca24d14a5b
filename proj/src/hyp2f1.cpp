#include "gelint/hyp2f1.hpp"

#include <cmath>
#include <string>

#include "gelint/errors.hpp"

namespace gelint {

namespace {

constexpr double kPoleBand = 1e-12;

bool near_nonpositive_integer(double c) {
  return c <= kPoleBand && std::abs(c - std::round(c)) <= kPoleBand;
}

// Upper bound on |t_{m+1} / t_m| for every m >= big_m. Writing
// R(m) = (a+m)(b+m) / ((c+m)(m+1)) = 1 + (alpha m + beta) / (m^2 + gamma m + c),
// the denominator is >= m^2 / 4 once m >= 2 (|gamma| + |c| + 1), and the bound
// below is decreasing in m from there on. Returns +inf before that point.
double ratio_sup(double a, double b, double c, double x, double big_m) {
  const double alpha = a + b - c - 1.0;
  const double beta = a * b - c;
  const double gamma = c + 1.0;
  if (big_m < 2.0 * (std::abs(gamma) + std::abs(c) + 1.0)) return HUGE_VAL;
  return x * (1.0 + 4.0 * std::abs(alpha) / big_m +
              4.0 * std::abs(beta) / (big_m * big_m));
}

}  // namespace

double pochhammer_ratio_step(double term, double a, double b, double c,
                             std::size_t n, double x) noexcept {
  const double nd = static_cast<double>(n);
  return term * ((a + nd) * (b + nd) * x) / ((c + nd) * (nd + 1.0));
}

double gauss_2f1(const Hyp2F1Params& prm, double tol) {
  if (near_nonpositive_integer(prm.c)) {
    throw DomainError("c", "hypergeometric parameter c is at a pole (0, -1, -2, ...)");
  }
  if (!(prm.x >= 0.0 && prm.x < 1.0)) {
    throw DomainError("x", "series argument must lie in [0, 1)");
  }
  if (!(tol > 0.0)) throw DomainError("tol", "tolerance must be positive");
  if (prm.x == 0.0) return 1.0;

  // Kahan-compensated partial sums in extended precision.
  long double sum = 1.0L;
  long double carry = 0.0L;
  double term = 1.0;
  double tail = HUGE_VAL;
  for (std::size_t n = 0; n < kHyp2F1TermCap; ++n) {
    term = pochhammer_ratio_step(term, prm.a, prm.b, prm.c, n, prm.x);
    if (term == 0.0) return static_cast<double>(sum);

    const long double y = static_cast<long double>(term) - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;

    // `term` is now t_{n+1}; bound the remainder t_{n+2} + t_{n+3} + ...
    const double rho =
        ratio_sup(prm.a, prm.b, prm.c, prm.x, static_cast<double>(n + 1));
    if (rho < 1.0) {
      tail = std::abs(term) * rho / (1.0 - rho);
      if (tail <= tol * std::abs(static_cast<double>(sum))) {
        return static_cast<double>(sum);
      }
    }
  }
  throw ConvergenceError("2F1 series did not converge within " +
                             std::to_string(kHyp2F1TermCap) +
                             " terms; x is too close to 1, use quadrature",
                         static_cast<double>(sum), tail);
}

}  // namespace gelint
