#pragma once

#include <functional>

namespace robin::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  unsigned max_depth = 18;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod (7/15) on a finite interval. Throws
/// QuadratureError when the estimated error stays above tolerance.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

/// Integral over (0, t] for integrands that may be singular (but integrable)
/// at 0: dyadic pieces [t 2^-(k+1), t 2^-k] are summed until they become
/// negligible.
Result integrate_from_zero(const std::function<double(double)>& f, double t,
                           const Options& opts = {});

} // namespace robin::quad
