#include "gelint/errors.hpp"

#include <cstdio>
#include <utility>

namespace gelint {

DomainError::DomainError(std::string parameter, const std::string& message)
    : std::domain_error(parameter + ": " + message),
      parameter_(std::move(parameter)) {}

namespace {

std::string divergence_message(double reciprocal_sum) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "K diverges at k = 1 since 1/p + 1/r = %.17g >= 1",
                reciprocal_sum);
  return buf;
}

}  // namespace

DivergenceError::DivergenceError(double reciprocal_sum)
    : DomainError("k", divergence_message(reciprocal_sum)),
      reciprocal_sum_(reciprocal_sum) {}

ConvergenceError::ConvergenceError(const std::string& message,
                                   double best_value, double error_estimate)
    : std::runtime_error(message),
      best_value_(best_value),
      error_estimate_(error_estimate) {}

IntegrandError::IntegrandError(const std::string& message, double abscissa)
    : std::runtime_error(message), abscissa_(abscissa) {}

}  // namespace gelint
