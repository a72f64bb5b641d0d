#include "robinlab/profile_function.hpp"

#include "robinlab/common.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace robin {

std::string to_string(ProfileFamily family) {
  switch (family) {
  case ProfileFamily::power: return "power";
  case ProfileFamily::power_log: return "power_log";
  case ProfileFamily::tabulated: return "tabulated";
  }
  return "unknown";
}

ProfileFunction ProfileFunction::power(double alpha, double t_max) {
  if (!(alpha >= 1.0) || !std::isfinite(alpha))
    throw InvalidArgument("power profile needs alpha >= 1 (bounded derivative)");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidArgument("power profile needs t_max > 0");
  ProfileFunction h;
  h.family_ = ProfileFamily::power;
  h.alpha_ = alpha;
  h.t_max_ = t_max;
  return h;
}

ProfileFunction ProfileFunction::power_log(double alpha, double gamma, double t_max) {
  if (!(alpha > 1.0) || !std::isfinite(alpha))
    throw InvalidArgument("power_log profile needs alpha > 1 (bounded derivative)");
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw InvalidArgument("power_log profile needs gamma >= 0");
  const double turning = std::min(1.0, std::exp(-gamma / alpha));
  if (t_max == 0.0) t_max = 0.5 * turning;
  if (!(t_max > 0.0) || !(t_max < turning))
    throw InvalidArgument("power_log profile is increasing only on (0, exp(-gamma/alpha)); "
                          "t_max out of range");
  ProfileFunction h;
  h.family_ = ProfileFamily::power_log;
  h.alpha_ = alpha;
  h.gamma_ = gamma;
  h.t_max_ = t_max;
  return h;
}

ProfileFunction ProfileFunction::tabulated(std::vector<double> t, std::vector<double> v) {
  if (t.size() != v.size() || t.size() < 3)
    throw InvalidArgument("tabulated profile needs at least 3 knots with matching sizes");
  if (t.front() != 0.0 || v.front() != 0.0)
    throw InvalidArgument("tabulated profile must start at the knot (0, 0)");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw InvalidArgument("tabulated knots must be strictly increasing in t");
    if (!(v[i] > v[i - 1])) throw InvalidArgument("tabulated values must be strictly increasing");
  }
  ProfileFunction h;
  h.family_ = ProfileFamily::tabulated;
  h.t_max_ = t.back();
  const std::size_t n = t.size();
  std::vector<double> delta(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (v[i + 1] - v[i]) / (t[i + 1] - t[i]);
  // Fritsch-Carlson: harmonic-mean interior slopes, one-sided three-point ends.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double w1 = 2 * (t[i + 1] - t[i]) + (t[i] - t[i - 1]);
    const double w2 = (t[i + 1] - t[i]) + 2 * (t[i] - t[i - 1]);
    m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0) s = 0;
    else if (d0 * d1 <= 0 && std::abs(s) > std::abs(3 * d0)) s = 3 * d0;
    return s;
  };
  m[0] = end_slope(t[1] - t[0], t[2] - t[1], delta[0], delta[1]);
  m[n - 1] = end_slope(t[n - 1] - t[n - 2], t[n - 2] - t[n - 3], delta[n - 2], delta[n - 3]);
  h.knot_t_ = std::move(t);
  h.knot_h_ = std::move(v);
  h.knot_slope_ = std::move(m);
  return h;
}

void ProfileFunction::check_domain(double t) const {
  if (!(t >= 0.0) || t > t_max_ * (1 + 1e-12)) {
    std::ostringstream msg;
    msg << "t = " << t << " outside the profile domain (0, " << t_max_ << "]";
    throw InvalidArgument(msg.str());
  }
}

std::size_t ProfileFunction::knot_interval(double t) const {
  auto it = std::upper_bound(knot_t_.begin(), knot_t_.end(), t);
  std::size_t i = it == knot_t_.begin() ? 0 : static_cast<std::size_t>(it - knot_t_.begin()) - 1;
  return std::min(i, knot_t_.size() - 2);
}

double ProfileFunction::eval(double t) const {
  check_domain(t);
  if (t == 0.0) return 0.0;
  switch (family_) {
  case ProfileFamily::power: return std::pow(t, alpha_);
  case ProfileFamily::power_log: return std::pow(t, alpha_) * std::pow(-std::log(t), gamma_);
  case ProfileFamily::tabulated: {
    const std::size_t i = knot_interval(t);
    const double dt = knot_t_[i + 1] - knot_t_[i];
    const double s = (t - knot_t_[i]) / dt;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * knot_h_[i] + h10 * dt * knot_slope_[i] + h01 * knot_h_[i + 1] +
           h11 * dt * knot_slope_[i + 1];
  }
  }
  return 0.0;
}

double ProfileFunction::derivative(double t) const {
  check_domain(t);
  switch (family_) {
  case ProfileFamily::power:
    if (alpha_ == 1.0) return 1.0;
    return t == 0.0 ? 0.0 : alpha_ * std::pow(t, alpha_ - 1);
  case ProfileFamily::power_log: {
    if (t == 0.0) return 0.0;
    const double L = -std::log(t);
    return std::pow(t, alpha_ - 1) * std::pow(L, gamma_ - 1) * (alpha_ * L - gamma_);
  }
  case ProfileFamily::tabulated: {
    const std::size_t i = knot_interval(t);
    const double dt = knot_t_[i + 1] - knot_t_[i];
    const double s = (t - knot_t_[i]) / dt;
    const double d00 = 6 * s * s - 6 * s, d10 = 3 * s * s - 4 * s + 1;
    const double d01 = -6 * s * s + 6 * s, d11 = 3 * s * s - 2 * s;
    return (d00 * knot_h_[i] + d01 * knot_h_[i + 1]) / dt + d10 * knot_slope_[i] +
           d11 * knot_slope_[i + 1];
  }
  }
  return 0.0;
}

double ProfileFunction::derivative_bound() const {
  double bound = std::abs(derivative(t_max_));
  constexpr int kSamples = 2000;
  for (int k = 0; k <= kSamples; ++k) {
    const double t = t_max_ * std::pow(10.0, -12.0 * k / kSamples);
    bound = std::max(bound, std::abs(derivative(t)));
  }
  if (family_ == ProfileFamily::tabulated)
    for (std::size_t i = 0; i + 1 < knot_t_.size(); ++i)
      for (int k = 0; k <= 16; ++k)
        bound = std::max(bound, std::abs(derivative(knot_t_[i] + (knot_t_[i + 1] - knot_t_[i]) * k / 16.0)));
  return bound;
}

std::string ProfileFunction::describe() const {
  std::ostringstream s;
  switch (family_) {
  case ProfileFamily::power: s << "power(alpha=" << alpha_ << ")"; break;
  case ProfileFamily::power_log: s << "power_log(alpha=" << alpha_ << ", gamma=" << gamma_ << ")"; break;
  case ProfileFamily::tabulated: s << "tabulated(" << knot_t_.size() << " knots)"; break;
  }
  return s.str();
}

} // namespace robin
