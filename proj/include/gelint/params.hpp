#pragma once

// Exponent parameters over P* = (-inf, 0) U (1, inf] and the triples (p, q, r)
// that index the generalized complete elliptic integrals.
//
// Every exponent is held through its reciprocal, so 1/inf = 0 is exact and
// infinity is a tagged state rather than a floating-point overflow.

#include <string>

namespace gelint {

class Exponent {
 public:
  // Throws DomainError (naming `name`) when v lies in [0, 1] or is not finite.
  static Exponent finite(double v, const std::string& name = "p");
  static Exponent infinity() noexcept { return Exponent(0.0, 0.0, true); }
  // 1/e = reciprocal; a reciprocal of exactly 0 is infinity. Throws unless
  // reciprocal < 1.
  static Exponent from_reciprocal(double reciprocal,
                                  const std::string& name = "p");

  bool is_infinite() const noexcept { return infinite_; }
  double reciprocal() const noexcept { return reciprocal_; }
  // Finite value, or +HUGE_VAL for infinity (display only).
  double value() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent(double value, double reciprocal, bool infinite) noexcept
      : value_(value), reciprocal_(reciprocal), infinite_(infinite) {}

  double value_;
  double reciprocal_;
  bool infinite_;
};

// Result of harmonic arithmetic on exponents. May fall outside P*; callers
// decide whether that matters (K at k = 1 uses the invalid branch to report
// divergence).
struct DerivedExponent {
  double reciprocal = 0.0;

  bool valid() const noexcept { return reciprocal < 1.0; }
  bool is_infinite() const noexcept { return reciprocal == 0.0; }
  // Throws DomainError when !valid().
  Exponent exponent(const std::string& name = "s") const;
};

// e* with 1/e + 1/e* = 1; conjugate(inf) = 1.
double conjugate(const Exponent& e) noexcept;
// Real overload for q, r and friends. Throws DomainError for e in {0, 1} or
// non-finite e.
double conjugate(double e);

// 1/s = 1/a - 1/b.
DerivedExponent harmonic_diff(const Exponent& a, double b);
DerivedExponent harmonic_diff(double a, double b);

struct DerivedExponents {
  double p_conj = 0.0;  // in (0, inf); inf* = 1
  double q_conj = 0.0;
  double r_conj = 0.0;
  DerivedExponent s;  // 1/s = 1/p - 1/q
  DerivedExponent u;  // 1/u = 1/p + 1/r
  DerivedExponent v;  // 1/v = 1/p - 1/r*
};

class ParamTriple {
 public:
  const Exponent& p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double r() const noexcept { return r_; }
  const DerivedExponents& derived() const noexcept { return derived_; }

  double inv_p() const noexcept { return p_.reciprocal(); }
  double inv_q() const noexcept { return inv_q_; }
  double inv_r() const noexcept { return inv_r_; }
  double inv_p_conj() const noexcept { return 1.0 - p_.reciprocal(); }
  double inv_q_conj() const noexcept { return 1.0 - inv_q_; }
  double inv_r_conj() const noexcept { return 1.0 - inv_r_; }

 private:
  friend ParamTriple validate_triple(const Exponent&, double, double);
  ParamTriple() = default;

  Exponent p_ = Exponent::infinity();
  double q_ = 0.0;
  double r_ = 0.0;
  double inv_q_ = 0.0;
  double inv_r_ = 0.0;
  DerivedExponents derived_;
};

ParamTriple validate_triple(const Exponent& p, double q, double r);
// Convenience: p = +inf (or HUGE_VAL) maps to the tagged infinity.
ParamTriple validate_triple(double p, double q, double r);

class Modulus {
 public:
  // Throws DomainError unless 0 <= k <= 1.
  explicit Modulus(double k);
  double value() const noexcept { return k_; }

 private:
  double k_;
};

// k' = (1 - k^q)^{1/r}.
Modulus complementary_modulus(Modulus k, double q, double r);

// Parses "inf", "infinity" (any case, optional '+') or a finite real.
Exponent parse_exponent(const std::string& text, const std::string& name = "p");

}  // namespace gelint
