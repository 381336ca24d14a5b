#include "gelint/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gelint/errors.hpp"
#include "gelint/hyp2f1.hpp"
#include "gelint/special.hpp"

namespace gelint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Quadrature tolerance behind the finite differences in ode_residual.
constexpr double kFiniteDifferenceTol = 1e-14;

void check_open_unit(const Modulus& k) {
  if (!(k.value() > 0.0 && k.value() < 1.0)) {
    throw DomainError("k", "identity checks require k in (0, 1)");
  }
}

}  // namespace

ParamTriple legendre_primary_triple(const ParamTriple& t) {
  return validate_triple(t.p(), t.q(), t.derived().r_conj);
}

ParamTriple legendre_complementary_triple(const ParamTriple& t) {
  return validate_triple(t.p(), t.r(), t.derived().q_conj);
}

LegendreFactors legendre_factors(const ParamTriple& triple, Modulus k,
                                 double tol, Backend backend) {
  const ParamTriple primary = legendre_primary_triple(triple);
  const ParamTriple complementary = legendre_complementary_triple(triple);
  // (k')^r = 1 - k^q exactly, so the complementary point swaps m and 1 - m.
  const ModulusPower mk = ModulusPower::of(k, triple.q());
  const ModulusPower mk_prime{mk.mc, mk.m};
  return {eval_E(primary, mk, backend, tol), eval_K(primary, mk, backend, tol),
          eval_E(complementary, mk_prime, backend, tol),
          eval_K(complementary, mk_prime, backend, tol)};
}

LegendreReport legendre_residual(const ParamTriple& triple, Modulus k,
                                 double tol, Backend backend) {
  check_open_unit(k);
  const DerivedExponent& s = triple.derived().s;
  if (!s.valid()) throw DomainError("s", "1/s = 1/p - 1/q leaves P*");

  const LegendreFactors f = legendre_factors(triple, k, tol, backend);
  LegendreReport rep;
  rep.k_prime = complementary_modulus(k, triple.q(), triple.r()).value();
  rep.term_EKp = f.E.value * f.K_prime.value;
  rep.term_KEp = f.K.value * f.E_prime.value;
  rep.term_KKp = f.K.value * f.K_prime.value;
  rep.rhs = pi_pq(triple.p(), triple.q()) * pi_pq(s.exponent("s"), triple.r()) / 4.0;
  rep.residual = rep.term_EKp + rep.term_KEp - rep.term_KKp - rep.rhs;

  const double propagated =
      std::abs(f.K_prime.value) * (f.E.abs_err_estimate + f.K.abs_err_estimate) +
      std::abs(f.E_prime.value) * f.K.abs_err_estimate +
      (std::abs(f.E.value) + std::abs(f.K.value)) * f.K_prime.abs_err_estimate +
      std::abs(f.K.value) * f.E_prime.abs_err_estimate;
  const double rounding =
      8.0 * kEps *
      (std::abs(rep.term_EKp) + std::abs(rep.term_KEp) + std::abs(rep.term_KKp) +
       std::abs(rep.rhs));
  rep.err_estimate = propagated + rounding;
  return rep;
}

double legendre_constancy_scan(const ParamTriple& triple,
                               std::span<const Modulus> k_grid, double tol) {
  double worst = 0.0;
  for (const Modulus& k : k_grid) {
    worst = std::max(worst, std::abs(legendre_residual(triple, k, tol).residual));
  }
  return worst;
}

ElliottParams ElliottParams::make(double a, double b, double c, double x) {
  if (!(std::abs(a) < 0.5)) throw DomainError("a", "Elliott's identity requires |a| < 1/2");
  if (!(b > -0.5) || !std::isfinite(b)) {
    throw DomainError("b", "Elliott's identity requires b > -1/2");
  }
  if (!(std::abs(c) < 0.5)) throw DomainError("c", "Elliott's identity requires |c| < 1/2");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("x", "Elliott's identity requires 0 < x < 1");
  return {a, b, c, x};
}

ElliottParams map_pqrk_to_elliott(const ParamTriple& t, Modulus k) {
  check_open_unit(k);
  return ElliottParams::make(t.inv_q() - 0.5, 0.5 - t.inv_p(), t.inv_r() - 0.5,
                             std::pow(k.value(), t.q()));
}

double elliott_bridge_factor(const ParamTriple& t) {
  return pi_pq(t.p(), t.q()) * pi_pq(t.p(), t.r()) / 4.0;
}

ElliottEvaluation elliott_evaluate(const ElliottParams& e, double tol) {
  const ElliottParams v = ElliottParams::make(e.a, e.b, e.c, e.x);
  const double x = v.x;
  const double xc = 1.0 - x;
  const double c_left = v.a + v.b + 1.0;
  const double c_right = v.b + v.c + 1.0;

  const double e_left = gauss_2f1({0.5 + v.a, -0.5 - v.c, c_left, x}, tol);
  const double k_left = gauss_2f1({0.5 + v.a, 0.5 - v.c, c_left, x}, tol);
  const double k_right = gauss_2f1({0.5 - v.a, 0.5 + v.c, c_right, xc}, tol);
  const double e_right = gauss_2f1({-0.5 - v.a, 0.5 + v.c, c_right, xc}, tol);

  ElliottEvaluation out;
  out.lhs = e_left * k_right + k_left * e_right - k_left * k_right;
  out.rhs = std::exp(log_gamma(v.a + v.b + 1.0) + log_gamma(v.b + v.c + 1.0) -
                     log_gamma(v.a + v.b + v.c + 1.5) - log_gamma(v.b + 0.5));
  out.residual = out.lhs - out.rhs;
  return out;
}

double elliott_residual(const ElliottParams& params, double tol) {
  return elliott_evaluate(params, tol).residual;
}

OdeResidual ode_residual(const ParamTriple& triple, Modulus k, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw DomainError("h", "finite-difference step must lie in [1e-7, 1e-3]");
  }
  const double kv = k.value();
  if (!(kv > h && kv < 1.0 - h)) {
    throw DomainError("k", "finite differences require k in (h, 1 - h)");
  }
  const Modulus lo(kv - h);
  const Modulus hi(kv + h);
  const auto quad = [&](Kind which, const Modulus& at) {
    const GciPoint pt{triple, at};
    return which == Kind::K
               ? eval_K(pt, Backend::QuadratureT, kFiniteDifferenceTol).value
               : eval_E(pt, Backend::QuadratureT, kFiniteDifferenceTol).value;
  };
  const double fd_E = (quad(Kind::E, hi) - quad(Kind::E, lo)) / (2.0 * h);
  const double fd_K = (quad(Kind::K, hi) - quad(Kind::K, lo)) / (2.0 * h);

  const GciPoint pt{triple, k};
  const double dE = dE_dk(pt);
  const double dK = dK_dk(pt);
  return {std::abs(fd_E - dE) / (1.0 + std::abs(dE)),
          std::abs(fd_K - dK) / (1.0 + std::abs(dK))};
}

ProofCoefficients proof_coefficients(const ParamTriple& t) noexcept {
  const double q = t.q();
  const double r = t.r();
  return {1.0 + q * t.inv_r() - q * t.inv_p(), 1.0 + r * t.inv_q() - r * t.inv_p()};
}

VanishingProduct vanishing_product(const ParamTriple& triple, Modulus k,
                                   double tol) {
  check_open_unit(k);
  const ParamTriple primary = legendre_primary_triple(triple);
  const ParamTriple complementary = legendre_complementary_triple(triple);
  const ModulusPower mk = ModulusPower::of(k, triple.q());
  const ModulusPower mk_prime{mk.mc, mk.m};

  const double k_minus_e = eval_K_minus_E(primary, mk, tol).value;
  const double k_prime = eval_K(complementary, mk_prime, Backend::Auto, tol).value;
  const double k_primary = eval_K(primary, mk, Backend::Auto, tol).value;
  return {k_minus_e * k_prime,
          pi_pq(triple.p(), triple.r()) / 2.0 * k.value() * k_primary};
}

}  // namespace gelint
