#include "gelint/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gelint/errors.hpp"

namespace gelint::quadrature {

namespace {

// An abscissa pair mirrored about t = 1/2: the nodes sit at `dist` from the
// left and right endpoints and share `weight`.
struct Node {
  double dist;
  double weight;
};

// Closest approach to a singular endpoint. Stays clear of subnormals.
constexpr double kSingularDistance = 1e-300;
// Closest approach to a regular endpoint; the omitted tail is O(|f| * 1e-30).
constexpr double kRegularDistance = 1e-30;
constexpr int kMinLevel = 3;

Node make_node(double t) {
  using std::numbers::pi;
  const double e = std::exp(-pi * std::sinh(t));
  const double dist = e / (1.0 + e);
  return {dist, pi * std::cosh(t) * dist * (1.0 - dist)};
}

// Nodes introduced at each level, t > 0 only. Level 0 holds t = 1, 2, ...;
// level L > 0 holds the odd multiples of 2^-L.
class NodeCache {
 public:
  const std::vector<Node>& level(int l) {
    std::call_once(once_[l], [this, l] { build(l); });
    return levels_[l];
  }

 private:
  void build(int l) {
    const double h = std::ldexp(1.0, -l);
    const double first = l == 0 ? 1.0 : h;
    const double stride = l == 0 ? 1.0 : 2.0 * h;
    std::vector<Node>& out = levels_[l];
    for (double t = first;; t += stride) {
      const Node n = make_node(t);
      if (n.dist < kSingularDistance) break;
      out.push_back(n);
    }
  }

  std::array<std::once_flag, kMaxLevel + 1> once_;
  std::array<std::vector<Node>, kMaxLevel + 1> levels_;
};

NodeCache& cache() {
  static NodeCache instance;
  return instance;
}

void check_tol(double tol, double rel_tol) {
  if (!(tol >= 1e-15 && tol <= 1e-2)) {
    throw DomainError("tol", "quadrature tolerance must lie in [1e-15, 1e-2]");
  }
  if (!(rel_tol >= 0.0)) throw DomainError("tol", "relative tolerance must be >= 0");
}

class Evaluator {
 public:
  explicit Evaluator(const IntegrandSpec& spec)
      : f_(spec.f),
        left_cut_(spec.singular_left ? kSingularDistance : kRegularDistance),
        right_cut_(spec.singular_right ? kSingularDistance : kRegularDistance) {}

  double center() { return eval(0.5, 0.5); }

  // Sum of weight * f over one mirrored node set.
  double sum(const std::vector<Node>& nodes) {
    double acc = 0.0;
    for (const Node& n : nodes) {
      const bool take_left = n.dist >= left_cut_;
      const bool take_right = n.dist >= right_cut_;
      if (!take_left && !take_right) break;
      double pair = 0.0;
      if (take_left) pair += eval(n.dist, 1.0 - n.dist);
      if (take_right) pair += eval(1.0 - n.dist, n.dist);
      acc += n.weight * pair;
    }
    return acc;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  double eval(double t, double tc) {
    ++evaluations_;
    const double y = f_(t, tc);
    if (!std::isfinite(y)) {
      throw IntegrandError("integrand is not finite at t = " + std::to_string(t), t);
    }
    return y;
  }

  const std::function<double(double, double)>& f_;
  double left_cut_;
  double right_cut_;
  std::size_t evaluations_ = 0;
};

}  // namespace

IntegrandSpec IntegrandSpec::unary(std::function<double(double)> g,
                                   bool singular_left, bool singular_right) {
  return IntegrandSpec{
      [g = std::move(g)](double t, double) { return g(t); }, singular_left,
      singular_right};
}

QuadResult integrate_01(const IntegrandSpec& spec, double tol, double rel_tol) {
  check_tol(tol, rel_tol);
  if (!spec.f) throw DomainError("f", "empty integrand");

  Evaluator ev(spec);
  // x(t) = (1 + tanh(pi/2 sinh t)) / 2; the center node has weight pi/4.
  double estimate = std::numbers::pi / 4.0 * ev.center() + ev.sum(cache().level(0));
  double err = HUGE_VAL;
  for (int l = 1; l <= kMaxLevel; ++l) {
    const double h = std::ldexp(1.0, -l);
    const double refined = 0.5 * estimate + h * ev.sum(cache().level(l));
    err = std::abs(refined - estimate);
    estimate = refined;
    if (l >= kMinLevel && err <= tol + rel_tol * std::abs(estimate)) {
      return {estimate, err, ev.evaluations()};
    }
  }
  throw ConvergenceError("tanh-sinh quadrature did not converge after " +
                             std::to_string(kMaxLevel) + " levels",
                         estimate, err);
}

QuadResult integrate_0x(const IntegrandSpec& spec, double x, double tol,
                        double rel_tol) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("x", "upper limit must lie in (0, 1]");
  }
  if (x == 1.0) return integrate_01(spec, tol, rel_tol);
  if (!spec.f) throw DomainError("f", "empty integrand");

  // t = x u, dt = x du; the complement 1 - x u = (1 - x) + x (1 - u).
  const double xc = 1.0 - x;
  IntegrandSpec scaled{
      [&f = spec.f, x, xc](double u, double uc) {
        return x * f(x * u, xc + x * uc);
      },
      spec.singular_left, false};
  // Tolerances refer to the original integral, which equals the scaled one.
  return integrate_01(scaled, tol, rel_tol);
}

}  // namespace gelint::quadrature
