#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace spinent {

/// Operand shapes do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a mathematical precondition (non-Hermitian matrix,
/// unnormalized density, negative radicand, empty profile, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative numerical routine did not reach its tolerance.
/// Carries the best value obtained and the error estimate achieved.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> best_value,
                   double achieved_error)
      : std::runtime_error(what), best_value_(best_value), achieved_error_(achieved_error) {}

  std::complex<double> best_value() const noexcept { return best_value_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  std::complex<double> best_value_;
  double achieved_error_;
};

}  // namespace spinent
