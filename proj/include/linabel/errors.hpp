// Exception types shared across the library.
#ifndef LINABEL_ERRORS_HPP
#define LINABEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linabel {

// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the real domain of the requested function.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Invalid parameter combination (e.g. gamma a non-positive integer).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// Evaluation at a pole of the expression.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Jet with a vanishing invariant denominator.
class SingularJetError : public Error {
 public:
  explicit SingularJetError(const std::string& msg) : Error(msg) {}
};

// Linear-equation coefficients with q = 0.
class SingularCoeffsError : public Error {
 public:
  explicit SingularCoeffsError(const std::string& msg) : Error(msg) {}
};

// Abel parameters on the singular set c1 = -3/2 or c2 = 0.
class SingularParamsError : public Error {
 public:
  explicit SingularParamsError(const std::string& msg) : Error(msg) {}
};

// Quadratic for (alpha, beta) has complex roots.
class ComplexParamsError : public Error {
 public:
  explicit ComplexParamsError(const std::string& msg) : Error(msg) {}
};

// Residual grid too small.
class GridError : public Error {
 public:
  explicit GridError(const std::string& msg) : Error(msg) {}
};

// Adaptive integrator step underflow.
class IntegratorError : public Error {
 public:
  explicit IntegratorError(const std::string& msg) : Error(msg) {}
};

// Requested value outside the attainable range of a parametric inversion.
class InversionError : public Error {
 public:
  InversionError(const std::string& msg, double lo, double hi)
      : Error(msg), attainable_lo(lo), attainable_hi(hi) {}
  double attainable_lo;
  double attainable_hi;
};

// Series or iteration failed to converge to the requested accuracy.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace linabel

#endif  // LINABEL_ERRORS_HPP
