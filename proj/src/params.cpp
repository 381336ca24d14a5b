#include "gelint/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "gelint/errors.hpp"

namespace gelint {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Exponent Exponent::finite(double v, const std::string& name) {
  if (!std::isfinite(v)) {
    throw DomainError(name, "finite exponent expected, got " + fmt17(v));
  }
  if (v >= 0.0 && v <= 1.0) {
    throw DomainError(name, "value " + fmt17(v) +
                                " is outside P* = (-inf, 0) U (1, inf]");
  }
  return Exponent(v, 1.0 / v, false);
}

Exponent Exponent::from_reciprocal(double reciprocal, const std::string& name) {
  if (!std::isfinite(reciprocal)) {
    throw DomainError(name, "reciprocal must be finite");
  }
  if (reciprocal == 0.0) return infinity();
  if (reciprocal >= 1.0) {
    throw DomainError(name, "reciprocal " + fmt17(reciprocal) +
                                " >= 1 places the exponent outside P*");
  }
  return Exponent(1.0 / reciprocal, reciprocal, false);
}

double Exponent::value() const noexcept {
  return infinite_ ? HUGE_VAL : value_;
}

std::string Exponent::to_string() const {
  return infinite_ ? std::string("inf") : fmt17(value_);
}

Exponent DerivedExponent::exponent(const std::string& name) const {
  return Exponent::from_reciprocal(reciprocal, name);
}

double conjugate(const Exponent& e) noexcept {
  if (e.is_infinite()) return 1.0;
  // e/(e-1) is exact-er than 1/(1 - 1/e) for finite e.
  return e.value() / (e.value() - 1.0);
}

double conjugate(double e) {
  if (!std::isfinite(e)) throw DomainError("e", "conjugate of non-finite real");
  if (e == 1.0) throw DomainError("e", "conjugate of 1 is undefined");
  if (e == 0.0) throw DomainError("e", "conjugate of 0 is undefined");
  return e / (e - 1.0);
}

DerivedExponent harmonic_diff(const Exponent& a, double b) {
  return harmonic_diff(a.is_infinite() ? HUGE_VAL : a.value(), b);
}

DerivedExponent harmonic_diff(double a, double b) {
  const double inv_a = std::isinf(a) ? 0.0 : 1.0 / a;
  const double inv_b = std::isinf(b) ? 0.0 : 1.0 / b;
  if (std::isnan(inv_a) || std::isnan(inv_b)) {
    throw DomainError("e", "harmonic arithmetic on NaN");
  }
  // When 1/a == 1/b the difference is exactly zero, so s is tagged infinity.
  return DerivedExponent{inv_a - inv_b};
}

ParamTriple validate_triple(const Exponent& p, double q, double r) {
  if (!std::isfinite(q) || q <= 1.0) {
    throw DomainError("q", "must be a finite real > 1, got " + fmt17(q));
  }
  if (!std::isfinite(r) || r <= 1.0) {
    throw DomainError("r", "must be a finite real > 1, got " + fmt17(r));
  }
  ParamTriple t;
  t.p_ = p;
  t.q_ = q;
  t.r_ = r;
  t.inv_q_ = 1.0 / q;
  t.inv_r_ = 1.0 / r;

  DerivedExponents& d = t.derived_;
  d.p_conj = conjugate(p);
  d.q_conj = conjugate(q);
  d.r_conj = conjugate(r);
  d.s = DerivedExponent{p.reciprocal() - t.inv_q_};
  d.u = DerivedExponent{p.reciprocal() + t.inv_r_};
  d.v = DerivedExponent{p.reciprocal() - (1.0 - t.inv_r_)};
  return t;
}

ParamTriple validate_triple(double p, double q, double r) {
  if (std::isinf(p) && p > 0) return validate_triple(Exponent::infinity(), q, r);
  return validate_triple(Exponent::finite(p, "p"), q, r);
}

Modulus::Modulus(double k) : k_(k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("k", "modulus must lie in [0, 1], got " + fmt17(k));
  }
}

Modulus complementary_modulus(Modulus k, double q, double r) {
  if (!(q > 1.0) || !(r > 1.0)) {
    throw DomainError(q > 1.0 ? "r" : "q", "must be > 1");
  }
  const double kv = k.value();
  if (kv == 0.0) return Modulus(1.0);
  // 1 - k^q, accurate when k^q is close to 1.
  const double kq = std::pow(kv, q);
  const double comp = kq > 0.5 ? -std::expm1(q * std::log(kv)) : 1.0 - kq;
  return Modulus(std::clamp(std::pow(comp, 1.0 / r), 0.0, 1.0));
}

Exponent parse_exponent(const std::string& text, const std::string& name) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (!lower.empty() && lower.front() == '+') lower.erase(0, 1);
  if (lower == "inf" || lower == "infinity") return Exponent::infinity();

  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end == text.c_str() || *end != '\0') {
    throw DomainError(name, "cannot parse '" + text + "' as an exponent");
  }
  return Exponent::finite(v, name);
}

}  // namespace gelint
