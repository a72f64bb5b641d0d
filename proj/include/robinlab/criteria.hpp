#pragma once

#include "robinlab/profile.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace robin {

enum class Verdict { positive, negative, critical, inconclusive };
std::string to_string(Verdict v);

template <typename Scalar>
struct ExponentM {
  Scalar value;
  Verdict verdict;
};

/// M = 1/p + (1/p' - a/p) / ((N-1)/N + a(1-b)). Exact for exact scalar
/// types; with floating point |M - 1| <= 1e-12 counts as critical.
template <typename Scalar>
ExponentM<Scalar> exponent_M(const Scalar& p, int N, const Scalar& a, const Scalar& b) {
  const Scalar one(1), zero(0);
  if (!(p > one)) throw InvalidArgument("exponent_M: p must exceed 1");
  if (N < 2) throw InvalidArgument("exponent_M: N must be at least 2");
  if (a < zero || a > one || b < zero || b > one) throw InvalidArgument("exponent_M: a and b must lie in [0, 1]");
  const Scalar n(N);
  const Scalar den = (n - one) / n + a * (one - b);
  if (!(den > zero)) throw InvalidArgument("exponent_M: zero denominator");
  const Scalar pc = p / (p - one);
  const Scalar M = one / p + (one / pc - a / p) / den;
  Verdict v;
  if constexpr (std::is_floating_point_v<Scalar>) {
    const Scalar d = M - one;
    v = (d < Scalar(1e-12) && d > Scalar(-1e-12)) ? Verdict::critical : (d > zero ? Verdict::positive : Verdict::negative);
  } else {
    v = M == one ? Verdict::critical : (M > one ? Verdict::positive : Verdict::negative);
  }
  return {M, v};
}

enum class Summability { convergent, divergent, inconclusive };
std::string to_string(Summability s);

/// Dyadic increments d_k = int over [t_max 2^{-k-1}, t_max 2^{-k}].
struct SummabilityTest {
  Summability result = Summability::inconclusive;
  std::vector<double> increments; ///< k = 0 .. k_max
  double partial_sum = 0.0;       ///< integral over [t_max 2^{-k_max-1}, t_max]
  double tail_estimate = 0.0;     ///< model tail below the last increment (convergent only)
  double mean_ratio = 0.0;        ///< mean of d_{k+1}/d_k over the tested window
  double ratio_spread = 0.0;
  double decay_power = 0.0; ///< q in d_k ~ log(1/t_k)^{-q}
  std::string rule;         ///< which rule decided
};

struct SummabilityOptions {
  int k_min = 4;
  int k_max = 40;
  double bounded_ratio = 0.99;   ///< every ratio above: increments bounded below
  double geometric_spread = 0.02;
  double geometric_ratio = 0.95;
  double convergent_power = 1.1; ///< algebraic decay faster than this: summable
  double divergent_power = 0.9;
};

/// Numeric classification of int_0^{t_max} g.
SummabilityTest classify_integral(const std::function<double(double)>& g, double t_max,
                                  const SummabilityOptions& opts = {});

enum class CriterionPath { automatic, analytic, numeric };
std::string to_string(CriterionPath p);

struct CriterionVerdict {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  double value = 0.0; ///< the integral (or M); +inf when divergent
  bool divergent = false;
  Verdict verdict = Verdict::inconclusive;
  CriterionPath path = CriterionPath::analytic;
  SummabilityTest numeric; ///< filled when the numeric path ran
};

/// int_0^{t_max} (int_0^t h^{N-2} / int_0^t h^{N-1})^{1/p} dt.
CriterionVerdict cusp_criterion(const ProfileFunction& h, int N, double p, CriterionPath path = CriterionPath::automatic,
                                const SummabilityOptions& opts = {});

/// int_0^{t_max} int_0^t h^{N-2} / h(t)^{N-1} dt.
CriterionVerdict bbc_criterion(const ProfileFunction& h, int N, CriterionPath path = CriterionPath::automatic,
                               const SummabilityOptions& opts = {});

/// Classical constant with |E|^{(N-1)/N} <= C_N Per(E).
double isoperimetric_C(int N);

/// Radius of the ball of volume |Omega|/2.
double half_volume_radius(double omega_volume, int N);

/// r^N / (N C_N (1+G))^N; requires r <= t0.
double density_estimate(double G, int N, double r, double t0);

struct DensityCheck {
  Vec2 x0;
  double r = 0.0;
  double measured = 0.0; ///< |Omega ∩ B(x0, r)|
  double bound = 0.0;
  bool ok = false;
};

DensityCheck check_density(const PolygonDomain& domain, const Vec2& x0, double r, double G);

struct GeometricInequalityReport {
  double a = 0.0, b = 0.0, G = 0.0;
  double G_a = 0.0; ///< smallest G satisfying P^e <= G P^i / |w|^a on every sample
  double G_b = 0.0; ///< smallest G satisfying |w|^{(N-1)/N} <= G (P^i+P^e)(P^i/P^e)^b
  int samples = 0;
  int skipped_b = 0; ///< samples with P^e = 0
  bool holds_a = false;
  bool holds_b = false;
};

/// Planar check over candidate samples with |w| <= min(|Omega|/2, 1).
GeometricInequalityReport check_geometric_inequalities(const PolygonDomain& domain, double a, double b, double G,
                                                       const std::vector<CandidateSample>& samples);

/// The same check on the cusp slices {x1 < t}, t in t_grid.
GeometricInequalityReport check_slice_inequalities(const ProfileFunction& h, int N, double a, double b, double G,
                                                   const std::vector<double>& t_grid);

/// Header plus one row per verdict.
void write_criteria_csv(const std::vector<CriterionVerdict>& rows, std::ostream& out);

} // namespace robin
