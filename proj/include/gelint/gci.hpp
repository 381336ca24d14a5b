#pragma once

// Generalized complete elliptic integrals
//
//   K_{p,q,r}(k) = int_0^1 (1 - t^q)^{-1/p} (1 - k^q t^q)^{-1/r}  dt
//   E_{p,q,r}(k) = int_0^1 (1 - t^q)^{-1/p} (1 - k^q t^q)^{1/r*}  dt
//
// with the weight (1 - t^q)^{-1/p} absent for p = inf. Three backends are
// available and agree within their tolerances:
//
//   QuadratureT      tanh-sinh quadrature of the t-integrals above;
//   Series           (pi_{p,q}/2) F(1/q, 1/r; 1/p* + 1/q; k^q) for K and
//                    (pi_{p,q}/2) F(1/q, -1/r*; 1/p* + 1/q; k^q) for E;
//   QuadratureTheta  the substitution t = sin_{p,q}(theta), integrating
//                    (1 - k^q sin^q)^{-1/r} (resp. ^{1/r*}) over (0, pi_{p,q}/2).
//
// Auto picks Series for k^q <= 0.9 and QuadratureT otherwise. Tolerances are
// hybrid: a result is accepted when its error estimate is <= tol (1 + |value|).

#include <optional>
#include <string_view>

#include "gelint/params.hpp"

namespace gelint {

enum class Backend { QuadratureT, Series, QuadratureTheta, Auto };

std::string_view to_string(Backend b) noexcept;
// Accepts "t", "quad", "quadrature-t", "series", "theta", "quadrature-theta",
// "auto". Throws DomainError otherwise.
Backend parse_backend(std::string_view text);

inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kAutoSeriesThreshold = 0.9;

struct GciPoint {
  ParamTriple triple;
  Modulus k;
};

// m = k^q together with mc = 1 - m, each carried to full relative precision.
// Identity checks evaluate at k' with (k')^r = 1 - k^q, where recomputing the
// complement from a rounded k' would lose digits.
struct ModulusPower {
  double m = 0.0;
  double mc = 1.0;

  static ModulusPower of(Modulus k, double q);
};

struct GciValue {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  Backend backend_used = Backend::Auto;
};

struct OdeCoefficients {
  double a = 0.0;  // 1 + q/r* - q/p
};

OdeCoefficients ode_coefficients(const ParamTriple& triple) noexcept;

// K at k in [0, 1). At k = 1, Auto returns the closed-form limit
// pi_{u,q}/2 when 1/p + 1/r < 1, QuadratureT integrates the merged
// singularity, and both throw DivergenceError when 1/p + 1/r >= 1.
GciValue eval_K(const GciPoint& point, Backend backend = Backend::Auto,
                double tol = kDefaultTol);
GciValue eval_K(const ParamTriple& triple, ModulusPower mk,
                Backend backend = Backend::Auto, double tol = kDefaultTol);

// E at k in [0, 1]; k = 1 is routed to quadrature under Auto.
GciValue eval_E(const GciPoint& point, Backend backend = Backend::Auto,
                double tol = kDefaultTol);
GciValue eval_E(const ParamTriple& triple, ModulusPower mk,
                Backend backend = Backend::Auto, double tol = kDefaultTol);

// K - E = k^q int_0^1 t^q (1 - t^q)^{-1/p} (1 - k^q t^q)^{-1/r} dt, free of the
// cancellation that subtracting eval_K and eval_E suffers at small k.
GciValue eval_K_minus_E(const ParamTriple& triple, ModulusPower mk,
                        double tol = kDefaultTol);

enum class Kind { K, E };

// Theta-form cross-check backend. Requires k in [0, 1).
GciValue eval_theta_form(const GciPoint& point, Kind which,
                         double tol = kDefaultTol);

// lim_{k -> 1-} K_{p,q,r}(k): pi_{u,q}/2 with 1/u = 1/p + 1/r, or nullopt
// (divergent) when 1/p + 1/r >= 1.
std::optional<double> limit_K_at_1(const ParamTriple& triple);

// dE/dk = q (E - K) / (r* k), k in (0, 1).
double dE_dk(const GciPoint& point, double tol = kDefaultTol);
// dK/dk = (a E - (a - k^q) K) / (k (1 - k^q)), k in (0, 1).
double dK_dk(const GciPoint& point, double tol = kDefaultTol);

}  // namespace gelint
