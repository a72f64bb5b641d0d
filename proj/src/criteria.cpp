#include "robinlab/criteria.hpp"

#include "robinlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace robin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

quad::Options tight() {
  quad::Options o;
  o.abs_tol = 0.0;
  o.rel_tol = 1e-10;
  o.max_depth = 30;
  return o;
}

/// t -> int_0^t h^k, anchored at the dyadic points t_max 2^{-j}.
class DyadicPrimitive {
public:
  DyadicPrimitive(const ProfileFunction& h, int k, double t_max, int levels)
      : h_(h), k_(k), t_max_(t_max), F_(levels + 1, 0.0) {
    if (k_ == 0) return;
    F_[levels] = quad::integrate_from_zero(power(), anchor(levels), tight()).value;
    for (int j = levels - 1; j >= 0; --j)
      F_[j] = F_[j + 1] + quad::integrate(power(), anchor(j + 1), anchor(j), tight()).value;
  }

  double operator()(double t) const {
    if (k_ == 0) return t;
    const int levels = static_cast<int>(F_.size()) - 1;
    const int j = static_cast<int>(std::floor(std::log2(t_max_ / t)));
    if (j >= levels) return quad::integrate_from_zero(power(), t, tight()).value;
    const int jj = std::max(j, 0);
    return F_[jj + 1] + quad::integrate(power(), anchor(jj + 1), t, tight()).value;
  }

private:
  std::function<double(double)> power() const {
    return [this](double s) { return std::pow(h_(s), k_); };
  }
  double anchor(int j) const { return std::ldexp(t_max_, -j); }

  const ProfileFunction& h_;
  int k_;
  double t_max_;
  std::vector<double> F_;
};

void check_common(const ProfileFunction& h, int N) {
  if (N < 2) throw InvalidArgument("criterion: N must be at least 2");
  if (!(h.t_max() > 0.0)) throw InvalidArgument("criterion: profile has empty support");
}

bool has_closed_form(const ProfileFunction& h) {
  return h.family() == ProfileFamily::power || h.family() == ProfileFamily::power_log;
}

void set_numeric(CriterionVerdict& v, const SummabilityTest& test) {
  v.numeric = test;
  switch (test.result) {
  case Summability::convergent:
    v.verdict = Verdict::positive;
    v.value = test.partial_sum + test.tail_estimate;
    break;
  case Summability::divergent:
    v.verdict = Verdict::negative;
    v.divergent = true;
    v.value = kInf;
    break;
  case Summability::inconclusive:
    v.verdict = Verdict::inconclusive;
    v.value = test.partial_sum;
    break;
  }
}

/// Verdict from the leading behaviour t^{-e} log(1/t)^{-g} near 0: finite iff
/// e < 1, or e = 1 and g > 1; the pure threshold cases g = 0 and g = 1 at
/// e = 1 are critical.
void set_exponent_verdict(CriterionVerdict& v, double e, double g) {
  if (e < 1.0 || (e == 1.0 && g > 1.0)) {
    v.verdict = Verdict::positive;
  } else if (e == 1.0 && (g == 0.0 || g == 1.0)) {
    v.verdict = Verdict::critical;
  } else {
    v.verdict = Verdict::negative;
  }
  v.divergent = v.verdict != Verdict::positive;
  if (v.divergent) v.value = kInf;
}

} // namespace

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::positive: return "positive";
  case Verdict::negative: return "negative";
  case Verdict::critical: return "critical";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Summability s) {
  switch (s) {
  case Summability::convergent: return "convergent";
  case Summability::divergent: return "divergent";
  case Summability::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(CriterionPath p) {
  switch (p) {
  case CriterionPath::automatic: return "automatic";
  case CriterionPath::analytic: return "analytic";
  case CriterionPath::numeric: return "numeric";
  }
  return "?";
}

SummabilityTest classify_integral(const std::function<double(double)>& g, double t_max, const SummabilityOptions& opts) {
  if (opts.k_min < 0 || opts.k_max < opts.k_min + 5) throw InvalidArgument("classify_integral: bad dyadic window");
  quad::Options qo = tight();
  qo.rel_tol = 1e-9;
  SummabilityTest r;
  for (int k = 0; k <= opts.k_max; ++k) {
    const double hi = std::ldexp(t_max, -k), lo = 0.5 * hi;
    r.increments.push_back(quad::integrate(g, lo, hi, qo).value);
    r.partial_sum += r.increments.back();
  }
  const int k0 = (opts.k_min + opts.k_max) / 2;
  const auto& d = r.increments;
  std::vector<double> ratios;
  bool positive = true;
  for (int k = k0; k <= opts.k_max; ++k) {
    if (!(d[k] > 0.0) || !std::isfinite(d[k])) positive = false;
    if (k < opts.k_max && d[k] != 0.0) ratios.push_back(d[k + 1] / d[k]);
  }
  if (!positive || ratios.empty()) {
    r.rule = "nonpositive or non-finite increments";
    return r;
  }
  const auto [rmin, rmax] = std::minmax_element(ratios.begin(), ratios.end());
  double mean = 0.0;
  for (double q : ratios) mean += q;
  mean /= static_cast<double>(ratios.size());
  r.mean_ratio = mean;
  r.ratio_spread = *rmax - *rmin;

  if (*rmin >= opts.bounded_ratio) {
    r.result = Summability::divergent;
    r.rule = "increments bounded below";
    return r;
  }
  if (*rmax < 1.0 && r.ratio_spread <= opts.geometric_spread && mean <= opts.geometric_ratio) {
    r.result = Summability::convergent;
    r.rule = "geometric decrement";
    r.tail_estimate = d[opts.k_max] * mean / (1.0 - mean);
    return r;
  }
  // d_k ~ A L_k^{-q} with L_k = log(1/t) at the piece midpoint.
  auto L = [&](int k) { return std::log(1.0 / t_max) + (k + 0.5) * std::log(2.0); };
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int k = k0; k <= opts.k_max; ++k) {
    if (!(L(k) > 0.0)) continue;
    const double x = std::log(L(k)), y = std::log(d[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 3) {
    r.rule = "too few samples for the algebraic fit";
    return r;
  }
  const double q = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.decay_power = q;
  if (q > opts.convergent_power) {
    r.result = Summability::convergent;
    r.rule = "algebraic decay in log(1/t)";
    const double A = d[opts.k_max] * std::pow(L(opts.k_max), q);
    r.tail_estimate = A * std::pow(L(opts.k_max) + 0.5 * std::log(2.0), 1.0 - q) / ((q - 1.0) * std::log(2.0));
  } else if (q < opts.divergent_power) {
    r.result = Summability::divergent;
    r.rule = "slow algebraic decay in log(1/t)";
  } else {
    r.rule = "decay power near 1";
  }
  return r;
}

CriterionVerdict cusp_criterion(const ProfileFunction& h, int N, double p, CriterionPath path,
                                const SummabilityOptions& opts) {
  check_common(h, N);
  if (!(p > 1.0)) throw InvalidArgument("cusp_criterion: p must exceed 1");
  CriterionVerdict v;
  v.name = "cusp";
  v.inputs = {{"h", h.describe()}, {"N", std::to_string(N)}, {"p", num(p)}};
  const double t_max = h.t_max();
  if (path == CriterionPath::automatic) path = has_closed_form(h) ? CriterionPath::analytic : CriterionPath::numeric;
  if (path == CriterionPath::analytic && !has_closed_form(h))
    throw InvalidArgument("cusp_criterion: no closed form for " + h.describe());
  v.path = path;

  auto run_numeric = [&] {
    const DyadicPrimitive lower(h, N - 2, t_max, opts.k_max + 2), upper(h, N - 1, t_max, opts.k_max + 2);
    return classify_integral([&](double t) { return std::pow(lower(t) / upper(t), 1.0 / p); }, t_max, opts);
  };

  if (path == CriterionPath::numeric) {
    set_numeric(v, run_numeric());
    return v;
  }
  // Near 0 the integrand behaves like c t^{-alpha/p} log(1/t)^{-gamma/p}.
  const double a = h.alpha(), g = h.family() == ProfileFamily::power_log ? h.gamma() : 0.0;
  set_exponent_verdict(v, a / p, g / p);
  if (v.verdict == Verdict::positive) {
    if (h.family() == ProfileFamily::power) {
      const double c = (a * (N - 1) + 1.0) / (a * (N - 2) + 1.0);
      v.value = std::pow(c, 1.0 / p) * std::pow(t_max, 1.0 - a / p) / (1.0 - a / p);
    } else {
      v.numeric = run_numeric();
      v.value = v.numeric.partial_sum + v.numeric.tail_estimate;
    }
  }
  return v;
}

CriterionVerdict bbc_criterion(const ProfileFunction& h, int N, CriterionPath path, const SummabilityOptions& opts) {
  check_common(h, N);
  CriterionVerdict v;
  v.name = "bbc";
  v.inputs = {{"h", h.describe()}, {"N", std::to_string(N)}};
  const double t_max = h.t_max();
  if (path == CriterionPath::automatic) path = has_closed_form(h) ? CriterionPath::analytic : CriterionPath::numeric;
  if (path == CriterionPath::analytic && !has_closed_form(h))
    throw InvalidArgument("bbc_criterion: no closed form for " + h.describe());
  v.path = path;

  auto run_numeric = [&] {
    const DyadicPrimitive lower(h, N - 2, t_max, opts.k_max + 2);
    return classify_integral([&](double t) { return lower(t) / std::pow(h(t), N - 1); }, t_max, opts);
  };

  if (path == CriterionPath::numeric) {
    set_numeric(v, run_numeric());
    return v;
  }
  // Near 0 the integrand behaves like c t^{1-alpha} log(1/t)^{-gamma}.
  const double a = h.alpha(), g = h.family() == ProfileFamily::power_log ? h.gamma() : 0.0;
  set_exponent_verdict(v, a - 1.0, g);
  if (v.verdict == Verdict::positive) {
    if (h.family() == ProfileFamily::power) {
      v.value = std::pow(t_max, 2.0 - a) / ((2.0 - a) * (a * (N - 2) + 1.0));
    } else {
      v.numeric = run_numeric();
      v.value = v.numeric.partial_sum + v.numeric.tail_estimate;
    }
  }
  return v;
}

double isoperimetric_C(int N) { return 1.0 / isoperimetric_constant(N); }

double half_volume_radius(double omega_volume, int N) {
  if (!(omega_volume > 0.0)) throw InvalidArgument("half_volume_radius: volume must be positive");
  return std::pow(0.5 * omega_volume / unit_ball_volume(N), 1.0 / N);
}

double density_estimate(double G, int N, double r, double t0) {
  if (N < 2) throw InvalidArgument("density_estimate: N must be at least 2");
  if (!(G > 0.0)) throw InvalidArgument("density_estimate: G must be positive");
  if (!(r >= 0.0)) throw InvalidArgument("density_estimate: r must be nonnegative");
  if (r > t0) throw InvalidArgument("density_estimate: r exceeds the half-volume radius");
  return std::pow(r / (N * isoperimetric_C(N) * (1.0 + G)), N);
}

DensityCheck check_density(const PolygonDomain& domain, const Vec2& x0, double r, double G) {
  DensityCheck c;
  c.x0 = x0;
  c.r = r;
  c.bound = density_estimate(G, 2, r, half_volume_radius(domain.area(), 2));
  c.measured = intersect(domain, Disk{x0, r}).volume;
  c.ok = c.measured >= c.bound;
  return c;
}

namespace {

struct InequalityAccumulator {
  GeometricInequalityReport rep;
  int N;

  void add(double vol, double Pe, double Pi) {
    ++rep.samples;
    if (Pe > 0.0) rep.G_a = std::max(rep.G_a, Pe * std::pow(vol, rep.a) / Pi);
    if (Pe > 0.0) {
      const double rhs = (Pi + Pe) * std::pow(Pi / Pe, rep.b);
      rep.G_b = std::max(rep.G_b, std::pow(vol, (N - 1.0) / N) / rhs);
    } else {
      ++rep.skipped_b;
    }
  }

  GeometricInequalityReport finish() {
    const double G = rep.G * (1.0 + 1e-8); // measures carry clipping round-off
    rep.holds_a = rep.G_a <= G;
    rep.holds_b = rep.G_b <= G;
    return rep;
  }
};

void check_ab(double a, double b, double G) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) throw InvalidArgument("geometric inequalities: a, b in [0, 1]");
  if (!(G > 0.0)) throw InvalidArgument("geometric inequalities: G must be positive");
}

} // namespace

GeometricInequalityReport check_geometric_inequalities(const PolygonDomain& domain, double a, double b, double G,
                                                       const std::vector<CandidateSample>& samples) {
  check_ab(a, b, G);
  InequalityAccumulator acc{{a, b, G}, 2};
  const double cap = std::min(0.5 * domain.area(), 1.0);
  for (const auto& s : samples) {
    const auto& m = s.measures;
    if (!(m.volume > 0.0) || m.volume > cap || !(m.Pi > 0.0)) continue;
    acc.add(m.volume, m.Pe, m.Pi);
  }
  return acc.finish();
}

GeometricInequalityReport check_slice_inequalities(const ProfileFunction& h, int N, double a, double b, double G,
                                                   const std::vector<double>& t_grid) {
  check_ab(a, b, G);
  InequalityAccumulator acc{{a, b, G}, N};
  const double cap = std::min(0.5 * cusp_volume(h, h.t_max(), N), 1.0);
  for (double t : t_grid) {
    const double vol = cusp_volume(h, t, N);
    if (!(vol > 0.0) || vol > cap) continue;
    acc.add(vol, cusp_exterior_perimeter(h, t, N), cusp_interior_perimeter(h, t, N));
  }
  return acc.finish();
}

void write_criteria_csv(const std::vector<CriterionVerdict>& rows, std::ostream& out) {
  out << "criterion,inputs,path,verdict,divergent,value,numeric_result,decay_power\n";
  for (const auto& r : rows) {
    std::string inputs;
    for (const auto& [k, val] : r.inputs) {
      if (!inputs.empty()) inputs += ';';
      inputs += k + '=' + val;
    }
    out << r.name << ",\"" << inputs << "\"," << to_string(r.path) << ',' << to_string(r.verdict) << ','
        << (r.divergent ? 1 : 0) << ',' << num(r.value) << ','
        << (r.numeric.increments.empty() ? std::string() : to_string(r.numeric.result)) << ','
        << num(r.numeric.decay_power) << '\n';
  }
}

} // namespace robin
