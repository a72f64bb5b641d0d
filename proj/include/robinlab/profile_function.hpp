#pragma once

#include <string>
#include <vector>

namespace robin {

enum class ProfileFamily { power, power_log, tabulated };

std::string to_string(ProfileFamily family);

/// Cusp generator h on (0, t_max]: the cusp is {x1 > 0, |x'| < h(x1)}.
///
/// Families:
///  - power:      h(t) = t^alpha, alpha >= 1
///  - power_log:  h(t) = t^alpha log(1/t)^gamma, alpha > 1, gamma >= 0;
///                increasing only for t < exp(-gamma/alpha)
///  - tabulated:  monotone piecewise-cubic (Fritsch-Carlson) through knots
///                starting at (0, 0)
class ProfileFunction {
public:
  static ProfileFunction power(double alpha, double t_max = 1.0);
  static ProfileFunction power_log(double alpha, double gamma, double t_max = 0.0);
  static ProfileFunction tabulated(std::vector<double> t, std::vector<double> h);

  double operator()(double t) const { return eval(t); }
  double eval(double t) const;
  double derivative(double t) const;

  ProfileFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  double t_max() const { return t_max_; }
  const std::vector<double>& knots_t() const { return knot_t_; }
  const std::vector<double>& knots_h() const { return knot_h_; }

  /// sup |h'| over a dense logarithmic sample of (0, t_max].
  double derivative_bound() const;

  /// Human readable description, e.g. "power(alpha=1.5)".
  std::string describe() const;

private:
  ProfileFunction() = default;
  void check_domain(double t) const;
  std::size_t knot_interval(double t) const;

  ProfileFamily family_ = ProfileFamily::power;
  double alpha_ = 1.0;
  double gamma_ = 0.0;
  double t_max_ = 1.0;
  std::vector<double> knot_t_, knot_h_, knot_slope_;
};

} // namespace robin
