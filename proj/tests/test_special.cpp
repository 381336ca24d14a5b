#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gelint/errors.hpp"
#include "gelint/params.hpp"
#include "gelint/special.hpp"
#include "oracles.hpp"

using namespace gelint;

namespace {

// B(1/2, 1/2) = int_0^1 dt / sqrt(t (1 - t)) = pi, by the midpoint rule on the
// substitution t = sin^2(phi), which turns the integrand into the constant 2.
double beta_half_half_by_substitution() {
  const int n = 64;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double phi = (i + 0.5) * (std::numbers::pi / 2) / n;
    const double t = std::sin(phi) * std::sin(phi);
    const double jac = 2.0 * std::sin(phi) * std::cos(phi);
    s += jac / std::sqrt(t * (1.0 - t));
  }
  return s * (std::numbers::pi / 2) / n;
}

}  // namespace

TEST_CASE("log_gamma at known points") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(std::numbers::pi))) < 1e-15);
  CHECK(oracle::rel_err(log_gamma(10.0), std::log(362880.0)) < 1e-15);
  // mpmath: loggamma(200.5), loggamma(1e-3)
  CHECK(oracle::rel_err(log_gamma(200.5), 860.58220350978249) < 1e-15);
  CHECK(oracle::rel_err(log_gamma(1e-3), 6.9071788853838536) < 1e-15);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("log_gamma recurrence across the Stirling switch") {
  for (double x = 150.25; x < 200.0; x += 1.7) {
    REQUIRE(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) <
            4e-16 * log_gamma(x + 1.0));
  }
}

TEST_CASE("beta matches an independent quadrature") {
  CHECK(oracle::rel_err(beta(0.5, 0.5), beta_half_half_by_substitution()) < 1e-14);
  CHECK(oracle::rel_err(beta(0.25, 7.0 / 6.0), 3.79426542131987384302) < 1e-14);
  CHECK(oracle::rel_err(beta(2.0, 3.0), 1.0 / 12.0) < 1e-15);
  CHECK(beta(3.0, 0.7) == doctest::Approx(beta(0.7, 3.0)).epsilon(1e-15));
}

TEST_CASE("pi_pq closed forms") {
  CHECK(pi_pq(Exponent::finite(2.0), 2.0) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(pi_pq(Exponent::infinity(), 2.0) == 2.0);
  CHECK(pi_pq(Exponent::infinity(), 3.7) == 2.0);
  CHECK(oracle::rel_err(pi_pq(Exponent::finite(3.0), 2.0), 2.58710955922979053495) < 1e-14);
  CHECK(oracle::rel_err(pi_pq(Exponent::finite(-3.0), 2.0), 1.68261852639054511341) < 1e-14);
  CHECK(oracle::rel_err(pi_pq(Exponent::finite(-12.0 / 5.0), 2.0) / 2,
                        0.811944004618188795137) < 1e-14);
  CHECK(oracle::rel_err(pi_pq(Exponent::finite(3.0), 3.0) / 2,
                        1.20919957615614523373) < 1e-14);
}

TEST_CASE("pi_{p,p} pi_{inf,p} / 4 = pi_p / 2") {
  for (double p : {1.5, 2.0, 3.0, 4.0, 7.5}) {
    const double lhs = pi_pq(Exponent::finite(p), p) * pi_pq(Exponent::infinity(), p) / 4;
    const double pi_p = 2.0 * (std::numbers::pi / p) / std::sin(std::numbers::pi / p);
    REQUIRE(oracle::rel_err(lhs, pi_p / 2) < 1e-14);
  }
}

TEST_CASE("pi_pq tends to pi_{inf,q} as p grows") {
  const double big = pi_pq(Exponent::finite(1e12), 2.5);
  CHECK(std::abs(big - 2.0) < 1e-10);
  const double neg = pi_pq(Exponent::finite(-1e12), 2.5);
  CHECK(std::abs(neg - 2.0) < 1e-10);
  CHECK(pi_pq(Exponent::finite(-1.0), 2.0) < 2.0);
  CHECK(pi_pq(Exponent::finite(3.0), 2.0) > 2.0);
}
