#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace robin {

using Vec2 = Eigen::Vector2d;

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs of an operation does not hold.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
public:
  QuadratureError(const std::string& what, double estimated_error)
      : Error(what), estimated_error_(estimated_error) {}
  double estimated_error() const { return estimated_error_; }

private:
  double estimated_error_;
};

/// Mesh refinement exceeded its element budget.
class MeshBudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Newton's method met a Hessian that is not positive definite.
class IndefiniteHessian : public Error {
public:
  using Error::Error;
};

/// The numerical resolution is insufficient for a requested extrapolation.
class InsufficientResolution : public Error {
public:
  using Error::Error;
};

inline constexpr double kPi = 3.14159265358979323846;

} // namespace robin
