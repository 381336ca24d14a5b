#include <doctest.h>

#include <cmath>

#include "gelint/errors.hpp"
#include "gelint/params.hpp"
#include "oracles.hpp"

using namespace gelint;

TEST_CASE("conjugate exponents") {
  CHECK(conjugate(2.0) == 2.0);
  CHECK(conjugate(Exponent::finite(2.0)) == 2.0);
  CHECK(conjugate(Exponent::infinity()) == 1.0);
  CHECK(conjugate(Exponent::finite(-1.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(conjugate(4.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(conjugate(1.0), DomainError);
  CHECK_THROWS_AS(conjugate(0.0), DomainError);
}

TEST_CASE("conjugate is an involution on finite P*") {
  for (int i = 0; i < 2000; ++i) {
    const double v = i % 2 ? oracle::uniform(1.0001, 50.0) : -oracle::uniform(1e-3, 50.0);
    const Exponent e = Exponent::finite(v);
    const double back = conjugate(conjugate(e));
    REQUIRE(std::abs(back - v) <= 1e-14 * std::abs(v) / std::min(1.0, std::abs(v - 1.0)));
    // p in P* <=> p* in (0, inf)
    REQUIRE(conjugate(e) > 0.0);
  }
}

TEST_CASE("Exponent rejects [0, 1] and keeps infinity tagged") {
  CHECK_THROWS_AS(Exponent::finite(0.5), DomainError);
  CHECK_THROWS_AS(Exponent::finite(0.0), DomainError);
  CHECK_THROWS_AS(Exponent::finite(1.0), DomainError);
  CHECK_THROWS_AS(Exponent::finite(HUGE_VAL), DomainError);
  CHECK_NOTHROW(Exponent::finite(1.0 + 1e-12));
  CHECK_NOTHROW(Exponent::finite(-1e-12));

  const Exponent inf = Exponent::infinity();
  CHECK(inf.is_infinite());
  CHECK(inf.reciprocal() == 0.0);
  CHECK(Exponent::from_reciprocal(0.0) == inf);
  CHECK_THROWS_AS(Exponent::from_reciprocal(1.0), DomainError);
  CHECK(Exponent::from_reciprocal(-0.25).value() == -4.0);
  CHECK(inf.to_string() == "inf");
}

TEST_CASE("parse_exponent") {
  CHECK(parse_exponent("inf").is_infinite());
  CHECK(parse_exponent("Infinity").is_infinite());
  CHECK(parse_exponent("+INF").is_infinite());
  CHECK(parse_exponent("-3").value() == -3.0);
  CHECK_THROWS_AS(parse_exponent("0.5"), DomainError);
  CHECK_THROWS_AS(parse_exponent("abc"), DomainError);
  CHECK_THROWS_AS(parse_exponent("-inf"), DomainError);
}

TEST_CASE("harmonic_diff") {
  const DerivedExponent s = harmonic_diff(Exponent::finite(3.0), 2.0);
  CHECK(s.valid());
  CHECK(s.exponent().value() == doctest::Approx(-6.0).epsilon(1e-14));

  const DerivedExponent flat = harmonic_diff(Exponent::finite(2.0), 2.0);
  CHECK(flat.reciprocal == 0.0);
  CHECK(flat.is_infinite());
  CHECK(flat.exponent().is_infinite());

  const DerivedExponent from_inf = harmonic_diff(Exponent::infinity(), 2.0);
  CHECK(from_inf.exponent().value() == -2.0);

  // 1/1.5 - 1/(-2) = 7/6 >= 1: outside P*, flagged rather than thrown.
  const DerivedExponent out = harmonic_diff(1.5, -2.0);
  CHECK_FALSE(out.valid());
  CHECK_THROWS_AS(out.exponent(), DomainError);
}

TEST_CASE("validate_triple") {
  const ParamTriple t = validate_triple(2.0, 2.0, 2.0);
  CHECK(t.derived().p_conj == 2.0);
  CHECK(t.derived().q_conj == 2.0);
  CHECK(t.derived().r_conj == 2.0);
  CHECK(t.derived().s.is_infinite());

  const ParamTriple neg = validate_triple(-3.0, 1.5, 4.0);
  CHECK(neg.derived().p_conj == doctest::Approx(0.75).epsilon(1e-15));

  const ParamTriple inf = validate_triple(HUGE_VAL, 2.0, 3.0);
  CHECK(inf.p().is_infinite());
  CHECK(inf.derived().p_conj == 1.0);
  CHECK(inf.inv_p() == 0.0);

  // u = (1/p + 1/r)^{-1}; (2,2,2) gives 1/u = 1, the divergent branch.
  CHECK_FALSE(t.derived().u.valid());
  CHECK(validate_triple(-2.0, 2.0, 2.0).derived().u.is_infinite());
  // 1/v = 1/3 - 3/4
  CHECK(validate_triple(3.0, 2.0, 4.0).derived().v.reciprocal ==
        doctest::Approx(-5.0 / 12.0).epsilon(1e-15));

  auto param_of = [](auto f) {
    try {
      f();
    } catch (const DomainError& e) {
      return e.parameter();
    }
    return std::string("none");
  };
  CHECK(param_of([] { validate_triple(0.5, 2.0, 2.0); }) == "p");
  CHECK(param_of([] { validate_triple(2.0, 1.0, 2.0); }) == "q");
  CHECK(param_of([] { validate_triple(2.0, 2.0, 0.9); }) == "r");
  CHECK(param_of([] { validate_triple(2.0, HUGE_VAL, 2.0); }) == "q");
  CHECK(param_of([] { validate_triple(2.0, 2.0, NAN); }) == "r");
}

TEST_CASE("derived reciprocals are consistent") {
  for (int i = 0; i < 500; ++i) {
    const double p = i % 3 == 0 ? HUGE_VAL
                     : i % 3 == 1 ? oracle::uniform(1.01, 20.0)
                                  : -oracle::uniform(0.1, 20.0);
    const double q = oracle::uniform(1.01, 10.0);
    const double r = oracle::uniform(1.01, 10.0);
    const ParamTriple t = validate_triple(p, q, r);
    REQUIRE(t.inv_p() + 1.0 / t.derived().p_conj == doctest::Approx(1.0).epsilon(1e-14));
    REQUIRE(t.derived().s.valid());  // 1/p - 1/q < 1 always
    REQUIRE(t.derived().v.valid());
  }
}

TEST_CASE("Modulus and complementary_modulus") {
  CHECK_THROWS_AS(Modulus(-0.1), DomainError);
  CHECK_THROWS_AS(Modulus(1.1), DomainError);
  CHECK_THROWS_AS(Modulus(NAN), DomainError);

  CHECK(complementary_modulus(Modulus(0.0), 2.0, 2.0).value() == 1.0);
  CHECK(complementary_modulus(Modulus(1.0), 2.0, 2.0).value() == 0.0);
  CHECK(complementary_modulus(Modulus(std::sqrt(0.5)), 2.0, 2.0).value() ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(complementary_modulus(Modulus(0.5), 3.0, 2.0).value() ==
        doctest::Approx(std::sqrt(0.875)).epsilon(1e-15));
}

TEST_CASE("complementary_modulus twice returns k") {
  for (int i = 0; i < 2000; ++i) {
    const double k = oracle::uniform(0.01, 0.99);
    const double q = oracle::uniform(1.05, 8.0);
    const double r = oracle::uniform(1.05, 8.0);
    const Modulus kp = complementary_modulus(Modulus(k), q, r);
    const Modulus back = complementary_modulus(kp, r, q);
    REQUIRE(std::pow(kp.value(), r) + std::pow(k, q) == doctest::Approx(1.0).epsilon(1e-14));
    // (1 - (k')^r) cancels when k^q is tiny; the tolerance widens with 1/k^q.
    const double slack = 1e-14 * std::max(1.0, 1.0 / std::pow(k, q));
    REQUIRE(oracle::rel_err(back.value(), k) <= slack);
  }
}
