#pragma once

#include "robinlab/levelsets.hpp"
#include "robinlab/profile.hpp"

#include <string>
#include <vector>

namespace robin {

struct PositivityOptions {
  double rel_tol = 1e-6;        ///< bisection tolerance on T
  double soundness_tol = 0.05;  ///< measured_min >= T/2 - soundness_tol * T
};

struct PositivityReport {
  double T = 0.0;
  double lower_bound = 0.0; ///< T / 2
  double measured_min = 0.0;
  double slack = 0.0;       ///< measured_min - T/2
  double volume_at_T = 0.0; ///< |{u < T}|
  double half_volume = 0.0; ///< |Omega| / 2
  double adm2_limit = 0.0;  ///< Pe(Omega)^{1/p} |{u<T}|^{1/p'}
  double adm2_value = 0.0;  ///< beta^{1/p} times the profile integral up to adm2_limit
  Certificate certificate = Certificate::inconclusive;
  bool inconclusive = false; ///< the curve does not certify summability; T not computed
  bool degenerate = false;   ///< u vanishes identically (f = 0), T = 0
  bool sound = true;
  std::string note;
};

/// Largest T with |{u<T}| <= |Omega|/2 and beta^{1/p} * int_0^{Pe^{1/p}|{u<T}|^{1/p'}} dm/I <= 1/2.
PositivityReport compute_T(const SolutionField& field, const ProfileCurve& curve, double beta, double p,
                           const PositivityOptions& opts = {});

enum class TrendClass { stabilizing, decaying, inconclusive };
std::string to_string(TrendClass c);

struct TrendOptions {
  double x_max = 1.0;
  double f = 1.0;
  double dirichlet_value = 1.0;
  double region_x = 0.5; ///< minimum taken over {x1 <= region_x}
  int n_boundary = 200;
  double h_target = 0.04;
  double stabilize_tol = 0.10; ///< last three values within this relative spread
  double decay_factor = 2.0;   ///< first / last for a decaying trend
  int threads = 1;
};

struct TrendPoint {
  double delta = 0.0;
  double min_value = 0.0;
  std::size_t n_triangles = 0;
  bool converged = false;
  bool ok = false;
  std::string error;
};

struct TrendReport {
  std::vector<TrendPoint> points;
  TrendClass classification = TrendClass::inconclusive;
  double last_three_spread = 0.0; ///< max/min - 1 over the last three values
  double total_factor = 0.0;      ///< first / last
  bool partial = false;           ///< some solve failed
  TrendOptions options;
};

/// Truncated cusps {delta < x1 < x_max} with u = dirichlet_value on the right
/// section, f constant; records min u over {x1 <= region_x} per delta.
TrendReport local_positivity_trend(const ProfileFunction& h, double p, double beta, const std::vector<double>& deltas,
                                   const TrendOptions& opts = {});

/// Classification rule applied to a value sequence.
TrendClass classify_trend(const std::vector<double>& values, double stabilize_tol, double decay_factor,
                          double* spread = nullptr, double* factor = nullptr);

} // namespace robin
