#pragma once

#include <stdexcept>
#include <string>

namespace gelint {

// A parameter lies outside the domain of the requested operation. `parameter`
// names the offending input ("p", "q", "k", ...).
class DomainError : public std::domain_error {
 public:
  DomainError(std::string parameter, const std::string& message);

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

// K_{p,q,r}(1) is infinite because 1/p + 1/r >= 1.
class DivergenceError : public DomainError {
 public:
  explicit DivergenceError(double reciprocal_sum);

  double reciprocal_sum() const noexcept { return reciprocal_sum_; }

 private:
  double reciprocal_sum_;
};

// An iterative method stopped at its cap. Carries the best value reached and
// the error estimate attached to it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& message, double best_value,
                   double error_estimate);

  double best_value() const noexcept { return best_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_value_;
  double error_estimate_;
};

// The integrand returned NaN or infinity at an interior abscissa.
class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(const std::string& message, double abscissa);

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace gelint
