#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gelint/errors.hpp"
#include "gelint/quadrature.hpp"
#include "oracles.hpp"

using namespace gelint;
using namespace gelint::quadrature;

TEST_CASE("polynomials and smooth integrands") {
  const auto r = integrate_01(IntegrandSpec::unary([](double t) { return t * t; }), 1e-14);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-15);
  CHECK(r.abs_err_estimate <= 1e-14);
  CHECK(r.evaluations > 0);

  const auto e = integrate_01(IntegrandSpec::unary([](double t) { return std::exp(t); }), 1e-14);
  CHECK(oracle::rel_err(e.value, std::exp(1.0) - 1.0) < 1e-15);
}

TEST_CASE("endpoint singularities use the complement") {
  // int_0^1 (1 - t)^{-1/2} dt = 2, needs tc near the right end.
  IntegrandSpec spec{[](double, double tc) { return 1.0 / std::sqrt(tc); }, false, true};
  CHECK(std::abs(integrate_01(spec, 1e-14).value - 2.0) < 1e-14);

  // Beta(1/2, 1/2) = pi
  IntegrandSpec both{[](double t, double tc) { return 1.0 / std::sqrt(t * tc); }, true, true};
  CHECK(std::abs(integrate_01(both, 1e-14).value - std::numbers::pi) < 4e-15);

  // A strong singularity: (1-t)^{-0.9}, integral 10.
  IntegrandSpec strong{[](double, double tc) { return std::pow(tc, -0.9); }, false, true};
  CHECK(oracle::rel_err(integrate_01(strong, 1e-13, 1e-13).value, 10.0) < 1e-12);
}

TEST_CASE("agrees with boost tanh_sinh on elliptic-type integrands") {
  boost::math::quadrature::tanh_sinh<double> ts;
  struct Case {
    double p, q, r, k;
  };
  for (const Case c : {Case{2, 2, 2, 0.5}, Case{3, 3, 1.5, 0.5}, Case{-2, 3, 1.5, 0.7},
                       Case{1.5, 1.25, 4, 0.9}, Case{5, 2, 4, 0.99}}) {
    const double m = std::pow(c.k, c.q);
    // (1 - t^q) from the complement; boost hands over (t, distance to the nearer end).
    const auto kernel = [&](double t, double tc) {
      const double omq = t > 0.5 ? -std::expm1(c.q * std::log1p(-tc)) : 1.0 - std::pow(t, c.q);
      return std::pow(omq, -1.0 / c.p) * std::pow(1.0 - m * std::pow(t, c.q), -1.0 / c.r);
    };
    const double want = ts.integrate(
        [&](double t, double tc) { return kernel(t, t > 0.5 ? tc : 1.0 - t); }, 0.0, 1.0,
        1e-15);
    IntegrandSpec spec{kernel, false, c.p > 0};
    const double got = integrate_01(spec, 1e-14, 1e-14).value;
    INFO("p=" << c.p << " q=" << c.q << " r=" << c.r << " k=" << c.k);
    CHECK(oracle::rel_err(got, want) < 1e-13);
  }
}

TEST_CASE("integrate_0x") {
  const auto r = integrate_0x(IntegrandSpec::unary([](double t) { return std::cos(t); }), 0.3,
                              1e-14);
  CHECK(std::abs(r.value - std::sin(0.3)) < 1e-15);
  // arcsin via (1 - t^2)^{-1/2}
  IntegrandSpec asin_kernel{[](double t, double tc) { return 1.0 / std::sqrt(tc * (1.0 + t)); },
                            false, true};
  CHECK(std::abs(integrate_0x(asin_kernel, 0.999, 1e-14).value - std::asin(0.999)) < 1e-14);
  CHECK(std::abs(integrate_0x(asin_kernel, 1.0, 1e-14).value - std::numbers::pi / 2) < 1e-14);
  CHECK_THROWS_AS(integrate_0x(asin_kernel, 0.0, 1e-12), DomainError);
  CHECK_THROWS_AS(integrate_0x(asin_kernel, 1.5, 1e-12), DomainError);
}

TEST_CASE("tolerance bounds and failures") {
  const auto f = IntegrandSpec::unary([](double t) { return t; });
  CHECK_THROWS_AS(integrate_01(f, 1e-16), DomainError);
  CHECK_THROWS_AS(integrate_01(f, 0.1), DomainError);
  CHECK_NOTHROW(integrate_01(f, 1e-15));
  CHECK_NOTHROW(integrate_01(f, 1e-2));

  const auto nan = IntegrandSpec::unary([](double t) { return t > 0.7 ? NAN : t; });
  CHECK_THROWS_AS(integrate_01(nan, 1e-10), IntegrandError);

  // A non-integrable singularity never settles.
  IntegrandSpec bad{[](double, double tc) { return 1.0 / tc; }, false, true};
  try {
    integrate_01(bad, 1e-10);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_value() > 0.0);
    CHECK(e.error_estimate() > 1e-10);
  }
}

TEST_CASE("error estimate brackets the true error") {
  for (double a : {0.3, 0.6, 0.9, 1.7}) {
    IntegrandSpec spec{[a](double, double tc) { return std::pow(tc, a - 1.0); }, false, a < 1};
    const auto r = integrate_01(spec, 1e-10);
    REQUIRE(std::abs(r.value - 1.0 / a) <= 1e-10 + r.abs_err_estimate);
  }
}
