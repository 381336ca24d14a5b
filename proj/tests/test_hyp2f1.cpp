#include <doctest.h>

#include <cmath>

#include "gelint/errors.hpp"
#include "gelint/hyp2f1.hpp"
#include "oracles.hpp"

using namespace gelint;

TEST_CASE("elementary closed forms") {
  for (double x : {0.1, 0.5, 0.9, 0.99}) {
    CAPTURE(x);
    CHECK(oracle::rel_err(gauss_2f1({1, 1, 2, x}, 1e-15), -std::log1p(-x) / x) < 1e-14);
    CHECK(oracle::rel_err(gauss_2f1({0.3, 1.7, 1.7, x}, 1e-15), std::pow(1 - x, -0.3)) < 1e-14);
    const double s = std::sqrt(x);
    CHECK(oracle::rel_err(gauss_2f1({0.5, 0.5, 1.5, x}, 1e-15), std::asin(s) / s) < 1e-14);
  }
}

TEST_CASE("reference values") {
  // mpmath hyp2f1 at 30 digits
  CHECK(oracle::rel_err(gauss_2f1({0.3, 0.4, 0.9, 0.7}, 1e-15), 1.15466737524091839732) < 1e-14);
  CHECK(oracle::rel_err(gauss_2f1({-0.5, 0.25, 1.75, 0.85}, 1e-15), 0.930861483083642319784) <
        1e-14);
  // classical K(0.5) = (pi/2) F(1/2, 1/2; 1; 1/4)
  CHECK(oracle::rel_err(std::acos(-1.0) / 2 * gauss_2f1({0.5, 0.5, 1, 0.25}, 1e-15),
                        1.68575035481259604287) < 1e-14);
}

TEST_CASE("terminating series") {
  // F(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
  const double b = 0.7, c = 1.3, x = 0.6;
  const double want = 1 - 2 * b * x / c + b * (b + 1) * x * x / (c * (c + 1));
  CHECK(std::abs(gauss_2f1({-2, b, c, x}, 1e-15) - want) < 1e-15);
  CHECK(pochhammer_ratio_step(1.0, -2.0, b, c, 2, x) == 0.0);
  CHECK(gauss_2f1({0.4, 0.2, 1.1, 0.0}, 1e-15) == 1.0);
}

TEST_CASE("pochhammer_ratio_step") {
  CHECK(pochhammer_ratio_step(1.0, 1.0, 1.0, 2.0, 0, 0.5) == doctest::Approx(0.25));
  CHECK(pochhammer_ratio_step(2.0, 0.5, 0.5, 1.0, 3, 0.1) ==
        doctest::Approx(2.0 * 3.5 * 3.5 * 0.1 / (4.0 * 4.0)));
}

TEST_CASE("domain and cap") {
  CHECK_THROWS_AS(gauss_2f1({1, 1, 0.0, 0.5}, 1e-12), DomainError);
  CHECK_THROWS_AS(gauss_2f1({1, 1, -2.0, 0.5}, 1e-12), DomainError);
  CHECK_THROWS_AS(gauss_2f1({1, 1, -3.0 + 1e-13, 0.5}, 1e-12), DomainError);
  CHECK_THROWS_AS(gauss_2f1({1, 1, 2, 1.0}, 1e-12), DomainError);
  CHECK_THROWS_AS(gauss_2f1({1, 1, 2, -0.1}, 1e-12), DomainError);
  // Slow convergence near x = 1 with a large a+b-c runs into the term cap.
  CHECK_THROWS_AS(gauss_2f1({3, 3, 1, 1 - 1e-6}, 1e-15), ConvergenceError);
}

TEST_CASE("Euler transformation as a self-consistency check") {
  // F(a,b;c;x) = (1-x)^{c-a-b} F(c-a, c-b; c; x)
  for (int i = 0; i < 200; ++i) {
    const double a = oracle::uniform(-1, 1), b = oracle::uniform(-1, 1);
    const double c = oracle::uniform(0.3, 3), x = oracle::uniform(0, 0.9);
    const double lhs = gauss_2f1({a, b, c, x}, 1e-15);
    const double rhs = std::pow(1 - x, c - a - b) * gauss_2f1({c - a, c - b, c, x}, 1e-15);
    REQUIRE(std::abs(lhs - rhs) <= 1e-13 * (1 + std::abs(lhs)));
  }
}
