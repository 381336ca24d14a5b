#pragma once

// Residuals of the identities satisfied by the generalized complete elliptic
// integrals:
//
//  * the Legendre-type relation, with k' = (1 - k^q)^{1/r} and 1/s = 1/p - 1/q,
//      E_{p,q,r*}(k) K_{p,r,q*}(k') + K_{p,q,r*}(k) E_{p,r,q*}(k')
//        - K_{p,q,r*}(k) K_{p,r,q*}(k') = pi_{p,q} pi_{s,r} / 4;
//  * Elliott's identity among six Gauss hypergeometric values;
//  * the first-order system for dE/dk and dK/dk;
//  * the coefficient identity q b - r a = 0 and the k -> 0 bound that fix the
//    constant in the Legendre-type relation.
//
// The Legendre-type relation pairs the triple (p, q, r*) at modulus k with the
// triple (p, r, q*) at modulus k'. That index bookkeeping lives here; gci only
// ever sees plain (p, q, r).

#include <span>

#include "gelint/gci.hpp"
#include "gelint/params.hpp"

namespace gelint {

struct LegendreReport {
  double k_prime = 0.0;
  double term_EKp = 0.0;  // E_{p,q,r*}(k) K_{p,r,q*}(k')
  double term_KEp = 0.0;  // K_{p,q,r*}(k) E_{p,r,q*}(k')
  double term_KKp = 0.0;  // K_{p,q,r*}(k) K_{p,r,q*}(k')
  double rhs = 0.0;       // pi_{p,q} pi_{s,r} / 4
  double residual = 0.0;  // term_EKp + term_KEp - term_KKp - rhs
  // Propagated factor error estimates plus a rounding floor.
  double err_estimate = 0.0;
};

// The four integral factors of the Legendre-type relation at one point.
struct LegendreFactors {
  GciValue E;        // E_{p,q,r*}(k)
  GciValue K;        // K_{p,q,r*}(k)
  GciValue E_prime;  // E_{p,r,q*}(k')
  GciValue K_prime;  // K_{p,r,q*}(k')
};

// The two triples the relation evaluates: (p, q, r*) and (p, r, q*).
ParamTriple legendre_primary_triple(const ParamTriple& triple);
ParamTriple legendre_complementary_triple(const ParamTriple& triple);

LegendreFactors legendre_factors(const ParamTriple& triple, Modulus k,
                                 double tol = kDefaultTol,
                                 Backend backend = Backend::Auto);

// Requires k in (0, 1).
LegendreReport legendre_residual(const ParamTriple& triple, Modulus k,
                                 double tol = kDefaultTol,
                                 Backend backend = Backend::Auto);

// max over the grid of |L(k) - pi_{p,q} pi_{s,r} / 4|.
double legendre_constancy_scan(const ParamTriple& triple,
                               std::span<const Modulus> k_grid,
                               double tol = kDefaultTol);

struct ElliottParams {
  double a = 0.0;  // |a| < 1/2
  double b = 0.0;  // b > -1/2
  double c = 0.0;  // |c| < 1/2
  double x = 0.5;  // 0 < x < 1

  // Throws DomainError naming the first parameter out of range.
  static ElliottParams make(double a, double b, double c, double x);
};

// a = 1/q - 1/2, b = 1/2 - 1/p, c = 1/r - 1/2, x = k^q. Under this map each
// hypergeometric factor of Elliott's identity is one of the four integrals of
// the Legendre-type relation divided by pi_{p,q}/2 or pi_{p,r}/2.
ElliottParams map_pqrk_to_elliott(const ParamTriple& triple, Modulus k);

// pi_{p,q} pi_{p,r} / 4: multiplies Elliott's identity into the
// Legendre-type relation under map_pqrk_to_elliott.
double elliott_bridge_factor(const ParamTriple& triple);

struct ElliottEvaluation {
  double lhs = 0.0;
  double rhs = 0.0;  // Gamma(a+b+1) Gamma(b+c+1) / (Gamma(a+b+c+3/2) Gamma(b+1/2))
  double residual = 0.0;
};

ElliottEvaluation elliott_evaluate(const ElliottParams& params,
                                   double tol = kDefaultTol);
double elliott_residual(const ElliottParams& params, double tol = kDefaultTol);

struct OdeResidual {
  double residual_E = 0.0;
  double residual_K = 0.0;
};

// Central differences (step h) of the t-quadrature backend against the
// analytic derivatives, each scaled by 1 + |derivative|. Requires
// h in [1e-7, 1e-3] and k in (h, 1 - h).
OdeResidual ode_residual(const ParamTriple& triple, Modulus k, double h);

struct ProofCoefficients {
  double a = 0.0;  // 1 + q/r - q/p
  double b = 0.0;  // 1 + r/q - r/p
};

ProofCoefficients proof_coefficients(const ParamTriple& triple) noexcept;

// (K_{p,q,r*} - E_{p,q,r*})(k) K_{p,r,q*}(k') and its upper bound
// (pi_{p,r}/2) k K_{p,q,r*}(k); the product vanishes as k -> 0.
struct VanishingProduct {
  double product = 0.0;
  double bound = 0.0;
};

VanishingProduct vanishing_product(const ParamTriple& triple, Modulus k,
                                   double tol = kDefaultTol);

}  // namespace gelint
