#pragma once

#include <stdexcept>
#include <string>

namespace stadium {

/// Argument outside the operation's mathematical domain (bad index, point not
/// interior, parameter out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature or iteration did not reach its tolerance. Carries the best
/// estimate obtained before giving up.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Linear solve or root bracketing failure.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stadium
