#include "gelint/gci.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gelint/errors.hpp"
#include "gelint/gtrig.hpp"
#include "gelint/hyp2f1.hpp"
#include "gelint/quadrature.hpp"
#include "gelint/special.hpp"
#include "kernels.hpp"

namespace gelint {

namespace {

// Floor for the theta-form tolerance: each integrand value carries the
// residual of a sin_pq inversion.
constexpr double kThetaTolFloor = 1e-11;

void check_tol(double tol) {
  if (!(tol >= 1e-15 && tol <= 1e-2)) {
    throw DomainError("tol", "tolerance must lie in [1e-15, 1e-2]");
  }
}

double half_pi_pq(const ParamTriple& t) { return pi_pq(t.p(), t.q()) / 2.0; }

GciValue closed_form(double value) {
  // Closed-form values (k = 0, and K at k = 1) report Auto as their backend.
  return {value, 4.0 * std::numeric_limits<double>::epsilon() * value, Backend::Auto};
}

// 1 - m t^q = (1 - m) + m (1 - t^q); both summands are nonnegative.
double one_minus_m_tq(const ModulusPower& mk, double t, double tc, double q) {
  return mk.mc + mk.m * detail::one_minus_pow(t, tc, q);
}

GciValue quad_t(const ParamTriple& tr, const ModulusPower& mk, Kind which,
                double tol) {
  const double q = tr.q();
  const double ip = tr.inv_p();
  // K carries (1 - m t^q)^{-1/r}; E carries (1 - m t^q)^{1/r*}.
  const double e2 = which == Kind::K ? -tr.inv_r() : tr.inv_r_conj();
  quadrature::IntegrandSpec spec{
      [q, ip, e2, mk](double t, double tc) {
        const double w = detail::pow_or_one(detail::one_minus_pow(t, tc, q), -ip);
        return w * std::pow(one_minus_m_tq(mk, t, tc, q), e2);
      },
      false, ip > 0.0 || (which == Kind::K && mk.mc < 0.5)};
  const auto res = quadrature::integrate_01(spec, tol, tol);
  return {res.value, res.abs_err_estimate, Backend::QuadratureT};
}

GciValue series(const ParamTriple& tr, const ModulusPower& mk, Kind which,
                double tol) {
  if (mk.mc == 0.0) {
    throw DomainError("k", "the series backend requires k < 1");
  }
  const double b = which == Kind::K ? tr.inv_r() : -tr.inv_r_conj();
  const Hyp2F1Params prm{tr.inv_q(), b, tr.inv_p_conj() + tr.inv_q(), mk.m};
  // Extra terms are cheap; the tighter cut keeps the series well inside tol.
  const double series_tol = std::max(tol * 1e-3, 1e-17);
  const double value = half_pi_pq(tr) * gauss_2f1(prm, series_tol);
  return {value, (series_tol + 4.0 * std::numeric_limits<double>::epsilon()) * std::abs(value),
          Backend::Series};
}

GciValue theta(const ParamTriple& tr, const ModulusPower& mk, Kind which,
               double tol) {
  if (mk.mc == 0.0) {
    throw DomainError("k", "the theta-form backend requires k < 1");
  }
  const GTrigParams g = GTrigParams::make(tr.p(), tr.q());
  const double hp = g.half_period;
  const double q = tr.q();
  const double e2 = which == Kind::K ? -tr.inv_r() : tr.inv_r_conj();
  quadrature::IntegrandSpec spec{
      [&g, hp, q, e2, mk](double x, double) {
        const double s = sin_pq(g, std::min(hp * x, hp));
        return hp * std::pow(one_minus_m_tq(mk, s, 1.0 - s, q), e2);
      },
      false, false};
  const double qtol = std::max(tol, kThetaTolFloor);
  const auto res = quadrature::integrate_01(spec, qtol, qtol);
  return {res.value, res.abs_err_estimate, Backend::QuadratureTheta};
}

GciValue dispatch(const ParamTriple& tr, const ModulusPower& mk, Kind which,
                  Backend backend, double tol) {
  switch (backend) {
    case Backend::QuadratureT:
      return quad_t(tr, mk, which, tol);
    case Backend::Series:
      return series(tr, mk, which, tol);
    case Backend::QuadratureTheta:
      return theta(tr, mk, which, tol);
    case Backend::Auto:
      break;
  }
  return mk.m <= kAutoSeriesThreshold ? series(tr, mk, which, tol)
                                      : quad_t(tr, mk, which, tol);
}

void check_power(const ModulusPower& mk) {
  if (!(mk.m >= 0.0 && mk.m <= 1.0 && mk.mc >= 0.0 && mk.mc <= 1.0)) {
    throw DomainError("k", "modulus power must lie in [0, 1]");
  }
}

void check_open_unit(const Modulus& k, const char* what) {
  if (!(k.value() > 0.0 && k.value() < 1.0)) {
    throw DomainError("k", std::string(what) + " requires k in (0, 1)");
  }
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::QuadratureT:
      return "quadrature-t";
    case Backend::Series:
      return "series";
    case Backend::QuadratureTheta:
      return "quadrature-theta";
    case Backend::Auto:
      return "auto";
  }
  return "auto";
}

Backend parse_backend(std::string_view text) {
  if (text == "t" || text == "quad" || text == "quadrature-t") return Backend::QuadratureT;
  if (text == "series") return Backend::Series;
  if (text == "theta" || text == "quadrature-theta") return Backend::QuadratureTheta;
  if (text == "auto") return Backend::Auto;
  throw DomainError("backend", "unknown backend '" + std::string(text) + "'");
}

ModulusPower ModulusPower::of(Modulus k, double q) {
  const double kv = k.value();
  if (kv == 0.0) return {0.0, 1.0};
  const double m = std::pow(kv, q);
  const double mc = m > 0.5 ? -std::expm1(q * std::log(kv)) : 1.0 - m;
  return {m, mc};
}

OdeCoefficients ode_coefficients(const ParamTriple& t) noexcept {
  return {1.0 + t.q() * t.inv_r_conj() - t.q() * t.inv_p()};
}

GciValue eval_K(const GciPoint& point, Backend backend, double tol) {
  return eval_K(point.triple, ModulusPower::of(point.k, point.triple.q()),
                backend, tol);
}

GciValue eval_K(const ParamTriple& tr, ModulusPower mk, Backend backend,
                double tol) {
  check_tol(tol);
  check_power(mk);
  if (mk.m == 0.0) return closed_form(half_pi_pq(tr));
  if (mk.mc == 0.0) {
    const auto limit = limit_K_at_1(tr);
    if (!limit) throw DivergenceError(tr.derived().u.reciprocal);
    if (backend == Backend::Auto) return closed_form(*limit);
  }
  return dispatch(tr, mk, Kind::K, backend, tol);
}

GciValue eval_E(const GciPoint& point, Backend backend, double tol) {
  return eval_E(point.triple, ModulusPower::of(point.k, point.triple.q()),
                backend, tol);
}

GciValue eval_E(const ParamTriple& tr, ModulusPower mk, Backend backend,
                double tol) {
  check_tol(tol);
  check_power(mk);
  if (mk.m == 0.0) return closed_form(half_pi_pq(tr));
  if (mk.mc == 0.0 && backend == Backend::Auto) backend = Backend::QuadratureT;
  return dispatch(tr, mk, Kind::E, backend, tol);
}

GciValue eval_K_minus_E(const ParamTriple& tr, ModulusPower mk, double tol) {
  check_tol(tol);
  check_power(mk);
  if (mk.m == 0.0) return {0.0, 0.0, Backend::Auto};
  if (mk.mc == 0.0 && !limit_K_at_1(tr)) {
    throw DivergenceError(tr.derived().u.reciprocal);
  }
  const double q = tr.q();
  const double ip = tr.inv_p();
  const double ir = tr.inv_r();
  quadrature::IntegrandSpec spec{
      [q, ip, ir, mk](double t, double tc) {
        const double w = detail::pow_or_one(detail::one_minus_pow(t, tc, q), -ip);
        return w * std::pow(t, q) * std::pow(one_minus_m_tq(mk, t, tc, q), -ir);
      },
      false, true};
  // m is factored out so the tolerance applies to (K - E)/m, which stays O(1)
  // as k -> 0.
  const auto res = quadrature::integrate_01(spec, tol, tol);
  return {mk.m * res.value, mk.m * res.abs_err_estimate, Backend::QuadratureT};
}

GciValue eval_theta_form(const GciPoint& point, Kind which, double tol) {
  check_tol(tol);
  if (!(point.k.value() < 1.0)) {
    throw DomainError("k", "the theta-form backend requires k < 1");
  }
  const ModulusPower mk = ModulusPower::of(point.k, point.triple.q());
  if (mk.m == 0.0) return closed_form(half_pi_pq(point.triple));
  return theta(point.triple, mk, which, tol);
}

std::optional<double> limit_K_at_1(const ParamTriple& triple) {
  const DerivedExponent& u = triple.derived().u;
  if (!u.valid()) return std::nullopt;
  return pi_pq(u.exponent("u"), triple.q()) / 2.0;
}

double dE_dk(const GciPoint& point, double tol) {
  check_open_unit(point.k, "dE_dk");
  const double e = eval_E(point, Backend::Auto, tol).value;
  const double k = eval_K(point, Backend::Auto, tol).value;
  const ParamTriple& t = point.triple;
  return t.q() * t.inv_r_conj() * (e - k) / point.k.value();
}

double dK_dk(const GciPoint& point, double tol) {
  check_open_unit(point.k, "dK_dk");
  const ParamTriple& t = point.triple;
  const ModulusPower mk = ModulusPower::of(point.k, t.q());
  const double e = eval_E(t, mk, Backend::Auto, tol).value;
  const double k = eval_K(t, mk, Backend::Auto, tol).value;
  const double a = ode_coefficients(t).a;
  return (a * e - (a - mk.m) * k) / (point.k.value() * mk.mc);
}

}  // namespace gelint
