#pragma once

#include "robinlab/solver.hpp"

#include <iosfwd>
#include <vector>

namespace robin {

/// Geometry of the sublevel set {u < t} of the piecewise-linear interpolant.
struct LevelStats {
  double t = 0.0;
  double volume = 0.0;
  double Pe = 0.0;      ///< length of robin and truncation boundary where the trace is below t
  double Pe_beta = 0.0; ///< the same portions weighted by their beta
  double Pi = 0.0;      ///< length of the level line {u = t} inside the domain
  double g = 0.0;       ///< integral of |grad u| over the set
  double gp = 0.0;      ///< integral of |grad u|^p over the set
  bool clamped = false; ///< t was outside [min u, max u] beyond the clamping margin
};

LevelStats sublevel_stats(const SolutionField& field, double t);

struct CaccioppoliCheck {
  double t = 0.0;
  double lhs = 0.0; ///< integral of |grad u|^p over {u < t}
  double rhs = 0.0; ///< operator_constant * t^p * (beta-weighted exterior perimeter)
  bool ok = false;
};

/// Energy comparison with max(u, t); `tol` is the relative discretization slack.
CaccioppoliCheck check_caccioppoli(const SolutionField& field, double t, double operator_constant = 1.0,
                                   double tol = 0.05);

struct GBoundCheck {
  double t = 0.0;
  double g = 0.0;
  double bound = 0.0; ///< t (operator_constant * Pe_beta)^{1/p} |{u<t}|^{1/p'}
  bool ok = false;
};

GBoundCheck check_g_bound(const SolutionField& field, double t, double operator_constant = 1.0, double tol = 0.05);

/// n points strictly inside (lo, hi), evenly spaced.
std::vector<double> interior_grid(double lo, double hi, int n);

/// n Chebyshev-Lobatto points on [lo, hi] (clustered at both ends).
std::vector<double> cosine_grid(double lo, double hi, int n);

struct CoareaCheck {
  double T = 0.0;
  double integral = 0.0; ///< trapezoid rule for the integral of Pi(t) from min u to T
  double g = 0.0;        ///< g(T)
  double rel_error = 0.0;
};

/// Compares the integral of the level-line length with g(T) on an n-point
/// cosine grid over [min u, T].
CoareaCheck check_coarea(const SolutionField& field, double T, int n = 100);

void write_level_stats_csv(const SolutionField& field, const std::vector<double>& t_grid, std::ostream& out,
                           double operator_constant = 1.0, double tol = 0.05);

} // namespace robin
