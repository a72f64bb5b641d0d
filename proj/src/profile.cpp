#include "robinlab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

namespace robin {

std::string to_string(Certificate c) {
  switch (c) {
  case Certificate::certified_summable: return "certified-summable";
  case Certificate::certified_divergent: return "certified-divergent";
  case Certificate::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(CurveKind k) {
  switch (k) {
  case CurveKind::slice: return "slice";
  case CurveKind::candidate: return "candidate";
  case CurveKind::bound: return "bound";
  }
  return "?";
}

std::string to_string(CandidateFamily f) {
  switch (f) {
  case CandidateFamily::corner_disks: return "corner_disks";
  case CandidateFamily::corner_squares: return "corner_squares";
  case CandidateFamily::boundary_distance: return "boundary_distance";
  case CandidateFamily::half_planes: return "half_planes";
  }
  return "?";
}

CandidateFamily candidate_family_from_string(const std::string& s) {
  for (auto f : {CandidateFamily::corner_disks, CandidateFamily::corner_squares, CandidateFamily::boundary_distance,
                 CandidateFamily::half_planes})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown candidate family '" + s + "'");
}

void monotone_envelope(std::vector<double>& m, std::vector<double>& I) {
  if (m.size() != I.size()) throw InvalidArgument("monotone_envelope: size mismatch");
  std::vector<std::size_t> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return m[a] < m[b] || (m[a] == m[b] && I[a] < I[b]); });
  std::vector<double> ms, is;
  for (std::size_t k : idx) {
    if (!ms.empty() && ms.back() == m[k]) {
      is.back() = std::min(is.back(), I[k]);
      continue;
    }
    ms.push_back(m[k]);
    is.push_back(I[k]);
  }
  for (std::size_t k = is.size(); k-- > 1;) is[k - 1] = std::min(is[k - 1], is[k]);
  m = std::move(ms);
  I = std::move(is);
}

ExponentFit fit_small_m_exponent(const std::vector<double>& m, const std::vector<double>& I) {
  if (m.empty()) throw InsufficientResolution("profile fit: no samples");
  const double top = 10.0 * m.front() * (1.0 + 1e-9);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t k = 0; k < m.size() && m[k] <= top; ++k) {
    const double x = std::log(m[k]), y = std::log(I[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 4) throw InsufficientResolution("profile fit: fewer than 4 samples in the smallest decade");
  ExponentFit fit;
  fit.samples = n;
  const double den = n * sxx - sx * sx;
  fit.exponent = den > 0 ? (n * sxy - sx * sy) / den : 0.0;
  fit.intercept = (sy - fit.exponent * sx) / n;
  return fit;
}

namespace {

double tail_integral(double m, double I_at_m, double e) {
  // Integral of 1/(c s^e) over (0, m] with c m^e = I_at_m.
  return m / (I_at_m * (1.0 - e));
}

Certificate certify(CurveKind kind, double e, double margin) {
  if (e <= 1.0 - margin) return Certificate::certified_summable;
  if (kind != CurveKind::candidate && e >= 1.0 + margin) return Certificate::certified_divergent;
  return Certificate::inconclusive;
}

} // namespace

ProfileCurve make_profile_curve(CurveKind kind, std::vector<double> m, std::vector<double> I,
                                const ProfileOptions& opts) {
  for (std::size_t k = 0; k < m.size(); ++k)
    if (!(m[k] > 0.0) || !(I[k] > 0.0) || !std::isfinite(m[k]) || !std::isfinite(I[k]))
      throw InvalidArgument("profile curve: samples must be positive and finite");
  monotone_envelope(m, I);
  ProfileCurve c;
  c.kind = kind;
  c.margin = opts.margin;
  c.m = std::move(m);
  c.I = std::move(I);
  const ExponentFit fit = fit_small_m_exponent(c.m, c.I);
  c.exponent = fit.exponent;
  c.fit_samples = fit.samples;
  c.coefficient = c.I.front() / std::pow(c.m.front(), c.exponent);
  c.divergent = c.exponent >= 1.0;
  c.certificate = certify(kind, c.exponent, opts.margin);
  c.cumulative.resize(c.m.size());
  if (c.divergent) {
    std::fill(c.cumulative.begin(), c.cumulative.end(), std::numeric_limits<double>::infinity());
  } else {
    double acc = tail_integral(c.m.front(), c.I.front(), c.exponent);
    c.cumulative[0] = acc;
    for (std::size_t k = 1; k < c.m.size(); ++k) {
      acc += 0.5 * (1.0 / c.I[k - 1] + 1.0 / c.I[k]) * (c.m[k] - c.m[k - 1]);
      c.cumulative[k] = acc;
    }
  }
  return c;
}

double slice_m(const ProfileFunction& h, double t, int N, double p) {
  const double pe = cusp_exterior_perimeter(h, t, N);
  const double vol = cusp_volume(h, t, N);
  return std::pow(pe, 1.0 / p) * std::pow(vol, 1.0 - 1.0 / p);
}

std::vector<double> slice_t_grid(const ProfileFunction& h, int N, double p, const ProfileOptions& opts) {
  if (!(p > 1.0)) throw InvalidArgument("slice_t_grid: p must exceed 1");
  const double t_max = h.t_max();
  const double m_top = slice_m(h, t_max, N, p);
  const int count = static_cast<int>(std::lround(opts.decades * opts.per_decade));
  const double m_low = m_top * std::pow(10.0, -static_cast<double>(count) / opts.per_decade);
  double t_lo = t_max;
  for (int k = 0; k < 400 && slice_m(h, t_lo, N, p) >= m_low; ++k) t_lo *= 0.5;
  std::vector<double> grid;
  grid.reserve(count + 1);
  double lo = std::log(t_lo);
  for (int k = count; k >= 0; --k) {
    const double target = m_top * std::pow(10.0, -static_cast<double>(k) / opts.per_decade);
    if (k == 0) {
      grid.push_back(t_max);
      break;
    }
    double a = lo, b = std::log(t_max);
    for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
      const double mid = 0.5 * (a + b);
      if (slice_m(h, std::exp(mid), N, p) < target)
        a = mid;
      else
        b = mid;
    }
    grid.push_back(std::exp(0.5 * (a + b)));
    lo = a;
  }
  return grid;
}

ProfileCurve slice_profile(const ProfileFunction& h, int N, double p, const std::vector<double>& t_grid,
                           const ProfileOptions& opts) {
  if (t_grid.empty()) throw InvalidArgument("slice_profile: empty t grid");
  std::vector<double> m, I;
  double prev = 0.0;
  for (double t : t_grid) {
    if (!(t > prev) || t > h.t_max()) throw InvalidArgument("slice_profile: t grid must increase inside (0, t_max]");
    prev = t;
    m.push_back(slice_m(h, t, N, p));
    I.push_back(cusp_interior_perimeter(h, t, N));
  }
  return make_profile_curve(CurveKind::slice, std::move(m), std::move(I), opts);
}

std::vector<CandidateSample> candidate_samples(const PolygonDomain& domain, double p,
                                               const std::vector<CandidateFamily>& families,
                                               const ProfileOptions& opts) {
  if (families.empty()) throw InvalidArgument("candidate_profile: empty family list");
  if (!(p > 1.0)) throw InvalidArgument("candidate_profile: p must exceed 1");
  domain.validate();
  const double area = domain.area();
  const double L = domain.diameter();
  const double pc = p / (p - 1.0);
  // m scales at least like the first power of the sweep parameter.
  const int per = 2 * opts.per_decade;
  const int steps = static_cast<int>(std::ceil((opts.decades + 1.0) * per));
  std::vector<double> sweep(steps + 1);
  for (int k = 0; k <= steps; ++k) sweep[k] = L * std::pow(10.0, -static_cast<double>(k) / per);

  std::vector<CandidateSample> out;
  auto keep = [&](CandidateFamily fam, int anchor, double param, const RegionMeasures& r) {
    if (!(r.volume > 0.0) || r.volume > 0.5 * area || !(r.Pi > 0.0) || !(r.Pe > 0.0)) return;
    CandidateSample s{fam, anchor, param, r, std::pow(r.Pe, 1.0 / p) * std::pow(r.volume, 1.0 / pc)};
    out.push_back(s);
  };

  Vec2 lo = domain.vertices[0], hi = lo;
  for (const auto& v : domain.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  for (auto fam : families) {
    switch (fam) {
    case CandidateFamily::corner_disks:
    case CandidateFamily::corner_squares:
      for (std::size_t i = 0; i < domain.size(); ++i)
        for (double r : sweep) {
          const Vec2& c = domain.vertices[i];
          const ConvexRegion reg = fam == CandidateFamily::corner_disks ? ConvexRegion(Disk{c, r}) : ConvexRegion(AxisSquare{c, r});
          keep(fam, static_cast<int>(i), r, intersect(domain, reg));
        }
      break;
    case CandidateFamily::boundary_distance:
      for (double d : sweep) keep(fam, -1, d, boundary_layer(domain, d));
      break;
    case CandidateFamily::half_planes: {
      const std::array<std::pair<Vec2, double>, 4> dirs{{{Vec2(-1, 0), -hi.x()}, {Vec2(1, 0), lo.x()},
                                                         {Vec2(0, -1), -hi.y()}, {Vec2(0, 1), lo.y()}}};
      // Cut {n.x <= base + d}: the slab of depth d at the extreme side.
      for (int k = 0; k < 4; ++k)
        for (double d : sweep) keep(fam, k, d, intersect(domain, HalfPlane{dirs[k].first, dirs[k].second + d}));
      break;
    }
    }
  }
  return out;
}

ProfileCurve candidate_profile(const PolygonDomain& domain, double p, const std::vector<CandidateFamily>& families,
                               const ProfileOptions& opts) {
  const auto samples = candidate_samples(domain, p, families, opts);
  if (samples.empty()) throw InsufficientResolution("candidate_profile: no admissible candidates");
  std::vector<double> m, I;
  for (const auto& s : samples) {
    m.push_back(s.m);
    I.push_back(s.measures.Pi);
  }
  monotone_envelope(m, I);
  // Resample on the logarithmic m grid; each grid value takes the envelope at
  // the first raw sample at or above it, which keeps it an upper bound.
  const int count = static_cast<int>(std::lround(opts.decades * opts.per_decade));
  std::vector<double> gm, gi;
  for (int k = count; k >= 0; --k) {
    const double target = m.back() * std::pow(10.0, -static_cast<double>(k) / opts.per_decade);
    if (target < m.front()) continue;
    const auto it = std::lower_bound(m.begin(), m.end(), target * (1.0 - 1e-12));
    gm.push_back(target);
    gi.push_back(I[std::min<std::size_t>(it - m.begin(), I.size() - 1)]);
  }
  return make_profile_curve(CurveKind::candidate, std::move(gm), std::move(gi), opts);
}

ProfileIntegral profile_integral(const ProfileCurve& curve, double m_max) {
  if (curve.m.empty()) throw InvalidArgument("profile_integral: empty curve");
  ProfileIntegral r;
  if (curve.divergent) {
    r.divergent = true;
    r.value = std::numeric_limits<double>::infinity();
    return r;
  }
  if (m_max <= 0.0) return r;
  const auto& m = curve.m;
  const auto& I = curve.I;
  if (m_max <= m.front()) {
    r.tail = tail_integral(m_max, profile_value(curve, m_max), curve.exponent);
    r.value = r.tail;
    return r;
  }
  r.tail = tail_integral(m.front(), I.front(), curve.exponent);
  double acc = r.tail;
  std::size_t k = 1;
  for (; k < m.size() && m[k] <= m_max; ++k) acc += 0.5 * (1.0 / I[k - 1] + 1.0 / I[k]) * (m[k] - m[k - 1]);
  if (k < m.size()) {
    const double frac = (m_max - m[k - 1]) / (m[k] - m[k - 1]);
    const double inv_end = (1.0 - frac) / I[k - 1] + frac / I[k];
    acc += 0.5 * (1.0 / I[k - 1] + inv_end) * (m_max - m[k - 1]);
  } else {
    acc += (m_max - m.back()) / I.back();
  }
  r.value = acc;
  return r;
}

double profile_value(const ProfileCurve& curve, double m) {
  const auto& ms = curve.m;
  const auto& is = curve.I;
  if (m <= ms.front()) return is.front() * std::pow(m / ms.front(), curve.exponent);
  if (m >= ms.back()) return is.back();
  const auto it = std::upper_bound(ms.begin(), ms.end(), m);
  const std::size_t k = it - ms.begin();
  const double w = std::log(m / ms[k - 1]) / std::log(ms[k] / ms[k - 1]);
  return std::exp((1.0 - w) * std::log(is[k - 1]) + w * std::log(is[k]));
}

double isoperimetric_constant(int N) {
  if (N < 2) throw InvalidArgument("isoperimetric_constant: N must be >= 2");
  return N * std::pow(unit_ball_volume(N), 1.0 / N);
}

LocalProfileComparison local_profile_comparison(const ProfileCurve& curve, double omega_volume, int N, double p) {
  if (!(omega_volume > 0.0) || !std::isfinite(omega_volume))
    throw InvalidArgument("local_profile_comparison: missing or invalid domain volume");
  if (curve.m.empty()) throw InvalidArgument("local_profile_comparison: empty curve");
  LocalProfileComparison r;
  r.a_N = isoperimetric_constant(N);
  r.eta = r.a_N / (2.0 * std::pow(omega_volume, 1.0 / N));
  r.epsilon = 1.0 / (std::pow(r.eta, -1.0 / p) + 1.0);
  r.C = r.a_N / (2.0 * std::pow(1.0 + std::pow(r.eta, 1.0 / p), (N - 1.0) / N));
  std::vector<double> bm, bi;
  for (double m : curve.m) {
    bm.push_back(m);
    bi.push_back(std::min(profile_value(curve, r.epsilon * m), r.C * std::pow(m, (N - 1.0) / N)));
  }
  ProfileOptions opts;
  opts.margin = curve.margin;
  r.bound = make_profile_curve(CurveKind::bound, std::move(bm), std::move(bi), opts);
  r.curve_summable = !curve.divergent;
  r.bound_summable = !r.bound.divergent;
  r.equivalent = r.curve_summable == r.bound_summable;
  return r;
}

void write_profile_csv(const ProfileCurve& curve, std::ostream& out) {
  out.precision(12);
  out << "m,I,cumulative\n";
  for (std::size_t k = 0; k < curve.m.size(); ++k)
    out << curve.m[k] << ',' << curve.I[k] << ',' << curve.cumulative[k] << '\n';
}

} // namespace robin
