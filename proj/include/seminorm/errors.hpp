#ifndef SEMINORM_ERRORS_HPP
#define SEMINORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seminorm {

/// Invalid argument value (negative input to a mean, mu outside [0,1], ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dimension mismatch or non-square input.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Iterative solver exhausted its budget; carries the residual it reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_residual)
      : std::runtime_error(what), achieved_residual(achieved_residual) {}
  double achieved_residual;
};

/// A matrix expected to be positive semidefinite has a negative eigenvalue
/// beyond the allowed tolerance band.
class NotPsdError : public std::runtime_error {
 public:
  NotPsdError(const std::string& what, double lambda_min)
      : std::runtime_error(what), lambda_min(lambda_min) {}
  double lambda_min;
};

/// Bad external input (files, flags). CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace seminorm

#endif
