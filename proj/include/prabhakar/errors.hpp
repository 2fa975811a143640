#pragma once

#include <stdexcept>
#include <string>

namespace prabhakar {

/// Argument outside the mathematical domain of an operation (z <= 0 for
/// log_gamma, a negative fractional order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter set violates a documented constraint. The message names the
/// violated constraint, e.g. "theta must exceed -alpha*gamma".
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numeric procedure did not reach its tolerance. The best
/// estimate obtained so far travels with the exception.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double err_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), err_estimate_(err_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double best_estimate_;
  double err_estimate_;
};

/// A computational route refuses an argument outside its applicability
/// bound (for example the power series beyond its cancellation budget).
class RouteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The alpha = 1 stable law is a point mass; it has no pointwise density.
class DegenerateLawError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A specialised evaluation path was requested for parameters it does not
/// cover.
class DispatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace prabhakar
