#pragma once

#include "robinlab/regions.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace robin {

enum class Certificate { certified_summable, certified_divergent, inconclusive };
std::string to_string(Certificate c);

/// slice: revolution-cusp slices; candidate: polygon candidate families;
/// bound: a derived lower-bound curve.
enum class CurveKind { slice, candidate, bound };
std::string to_string(CurveKind k);

struct ProfileOptions {
  int per_decade = 16;
  double decades = 6.0;
  /// Exponent distance from 1 required before a certificate is issued.
  double margin = 0.05;
};

/// Sampled profile m -> I(m) with the small-m power fit I ≈ c m^e.
struct ProfileCurve {
  CurveKind kind = CurveKind::candidate;
  std::vector<double> m; ///< strictly increasing, > 0
  std::vector<double> I; ///< nondecreasing envelope, > 0
  std::vector<double> cumulative; ///< integral of 1/I over (0, m_k]; +inf when divergent
  double exponent = 0.0;
  double coefficient = 0.0; ///< c with I(m_0) = c m_0^e
  int fit_samples = 0;
  bool divergent = false;
  Certificate certificate = Certificate::inconclusive;
  double margin = 0.05;
};

/// Suffix minimum over samples sorted by m: I_env(m_k) = min{I_j : m_j >= m_k}.
/// Duplicate m values are merged. Idempotent.
void monotone_envelope(std::vector<double>& m, std::vector<double>& I);

struct ExponentFit {
  double exponent = 0.0;
  double intercept = 0.0; ///< log c of the least-squares line
  int samples = 0;
};

/// Least-squares slope of log I against log m over the smallest decade.
/// Throws InsufficientResolution with fewer than 4 samples there.
ExponentFit fit_small_m_exponent(const std::vector<double>& m, const std::vector<double>& I);

/// Builds a curve from raw samples: envelope, fit, cumulative integral and
/// certificate for the given kind.
ProfileCurve make_profile_curve(CurveKind kind, std::vector<double> m, std::vector<double> I,
                                const ProfileOptions& opts = {});

/// m(t) = Pe(Omega_t)^{1/p} |Omega_t|^{1/p'} for the revolution cusp.
double slice_m(const ProfileFunction& h, double t, int N, double p);

/// t values whose slice masses m(t) form a logarithmic grid reaching
/// `opts.decades` below m(t_max).
std::vector<double> slice_t_grid(const ProfileFunction& h, int N, double p, const ProfileOptions& opts = {});

ProfileCurve slice_profile(const ProfileFunction& h, int N, double p, const std::vector<double>& t_grid,
                           const ProfileOptions& opts = {});

enum class CandidateFamily { corner_disks, corner_squares, boundary_distance, half_planes };
std::string to_string(CandidateFamily f);
CandidateFamily candidate_family_from_string(const std::string& s);

struct CandidateSample {
  CandidateFamily family;
  int anchor = -1;        ///< vertex index (corner families) or direction index (half planes)
  double parameter = 0.0; ///< radius, half side, layer depth or cut depth
  RegionMeasures measures;
  double m = 0.0;
};

/// Every candidate subset with |omega| <= |Omega|/2 and P^i > 0, swept over a
/// logarithmic parameter range that reaches decades below the domain size.
std::vector<CandidateSample> candidate_samples(const PolygonDomain& domain, double p,
                                               const std::vector<CandidateFamily>& families,
                                               const ProfileOptions& opts = {});

ProfileCurve candidate_profile(const PolygonDomain& domain, double p, const std::vector<CandidateFamily>& families,
                               const ProfileOptions& opts = {});

struct ProfileIntegral {
  double value = 0.0;
  bool divergent = false;
  double tail = 0.0; ///< analytic part below the first sample
};

/// Integral of 1/I over (0, m_max]: power-law tail below the first sample,
/// trapezoid rule over the samples, I held constant beyond the last one.
ProfileIntegral profile_integral(const ProfileCurve& curve, double m_max);

/// I at m: log-log interpolation inside, fitted power law below, constant above.
double profile_value(const ProfileCurve& curve, double m);

struct LocalProfileComparison {
  double a_N = 0.0;
  double eta = 0.0;
  double epsilon = 0.0;
  double C = 0.0;
  ProfileCurve bound; ///< m -> min(I(eps m), C m^{(N-1)/N})
  bool curve_summable = false;
  bool bound_summable = false;
  bool equivalent = false;
};

/// Isoperimetric constant a_N = N |B_1|^{1/N}: Per(E) >= a_N |E|^{(N-1)/N}.
double isoperimetric_constant(int N);

LocalProfileComparison local_profile_comparison(const ProfileCurve& curve, double omega_volume, int N, double p);

void write_profile_csv(const ProfileCurve& curve, std::ostream& out);

} // namespace robin
