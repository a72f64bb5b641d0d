#include "robinlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace robin {

PositivityReport compute_T(const SolutionField& field, const ProfileCurve& curve, double beta, double p,
                           const PositivityOptions& opts) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidArgument("compute_T: beta must be finite and >= 0");
  if (!(p > 1.0)) throw InvalidArgument("compute_T: p must exceed 1");
  const Mesh& mesh = *field.mesh;
  PositivityReport r;
  r.certificate = curve.certificate;
  r.measured_min = min_value(field);
  r.half_volume = 0.5 * mesh.area();
  if (curve.certificate != Certificate::certified_summable) {
    r.inconclusive = true;
    r.note = "profile curve is " + to_string(curve.certificate) + "; T not computed";
    return r;
  }
  double pe_total = 0.0;
  for (const auto& e : mesh.boundary_edges)
    if (is_exterior(e.tag)) pe_total += e.length;
  const double pc = p / (p - 1.0);

  struct Eval {
    double volume, limit, adm2;
    bool feasible;
  };
  auto evaluate = [&](double t) {
    Eval e{};
    e.volume = sublevel_stats(field, t).volume;
    e.limit = std::pow(pe_total, 1.0 / p) * std::pow(e.volume, 1.0 / pc);
    e.adm2 = std::pow(beta, 1.0 / p) * profile_integral(curve, e.limit).value;
    e.feasible = e.volume <= r.half_volume && e.adm2 <= 0.5;
    return e;
  };

  const double lo0 = field.u.minCoeff(), hi0 = field.u.maxCoeff();
  if (hi0 <= 0.0 && lo0 >= 0.0) {
    r.degenerate = true;
    r.note = "u vanishes identically; T = 0";
    r.sound = true;
    return r;
  }
  double lo = lo0, hi = hi0;
  Eval at_lo = evaluate(lo);
  if (!at_lo.feasible) {
    r.note = "no admissible T above the numerical floor";
    r.volume_at_T = at_lo.volume;
    r.adm2_limit = at_lo.limit;
    r.adm2_value = at_lo.adm2;
    return r;
  }
  if (evaluate(hi).feasible) lo = hi;
  while (hi - lo > opts.rel_tol * std::abs(hi)) {
    const double mid = 0.5 * (lo + hi);
    const Eval e = evaluate(mid);
    if (e.feasible) {
      lo = mid;
      at_lo = e;
    } else {
      hi = mid;
    }
  }
  at_lo = evaluate(lo);
  r.T = std::max(lo, 0.0);
  r.lower_bound = 0.5 * r.T;
  r.slack = r.measured_min - r.lower_bound;
  r.volume_at_T = at_lo.volume;
  r.adm2_limit = at_lo.limit;
  r.adm2_value = at_lo.adm2;
  r.sound = r.measured_min >= r.lower_bound - opts.soundness_tol * r.T;
  return r;
}

std::string to_string(TrendClass c) {
  switch (c) {
  case TrendClass::stabilizing: return "stabilizing";
  case TrendClass::decaying: return "decaying";
  case TrendClass::inconclusive: return "inconclusive";
  }
  return "?";
}

TrendClass classify_trend(const std::vector<double>& v, double stabilize_tol, double decay_factor, double* spread,
                          double* factor) {
  double sp = 0.0, fac = 0.0;
  TrendClass c = TrendClass::inconclusive;
  if (v.size() >= 3) {
    const auto last = std::vector<double>(v.end() - 3, v.end());
    const double mn = *std::min_element(last.begin(), last.end());
    const double mx = *std::max_element(last.begin(), last.end());
    sp = mn > 0.0 ? mx / mn - 1.0 : std::numeric_limits<double>::infinity();
    fac = v.back() > 0.0 ? v.front() / v.back() : std::numeric_limits<double>::infinity();
    const bool monotone = std::is_sorted(v.rbegin(), v.rend());
    if (sp <= stabilize_tol)
      c = TrendClass::stabilizing;
    else if (monotone && fac >= decay_factor)
      c = TrendClass::decaying;
  }
  if (spread) *spread = sp;
  if (factor) *factor = fac;
  return c;
}

TrendReport local_positivity_trend(const ProfileFunction& h, double p, double beta, const std::vector<double>& deltas,
                                   const TrendOptions& opts) {
  if (deltas.empty()) throw InvalidArgument("local_positivity_trend: empty truncation sequence");
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (!(deltas[k] > 0.0) || deltas[k] >= opts.region_x)
      throw InvalidArgument("local_positivity_trend: truncations must lie in (0, region_x)");
    if (k && !(deltas[k] < deltas[k - 1])) throw InvalidArgument("local_positivity_trend: truncations must decrease");
  }
  TrendReport rep;
  rep.options = opts;
  rep.points.resize(deltas.size());

  auto solve_one = [&](std::size_t k) {
    TrendPoint& pt = rep.points[k];
    pt.delta = deltas[k];
    try {
      CuspPolygonOptions co;
      co.right_tag = EdgeTag::dirichlet;
      co.beta = beta;
      const auto dom = build_cusp_polygon(h, deltas[k], opts.x_max, opts.n_boundary, co);
      auto mesh = std::make_shared<const Mesh>(triangulate(dom, opts.h_target));
      RunParams rp;
      rp.p = p;
      rp.f_constant = opts.f;
      const auto field = minimize(mesh, rp, {{EdgeTag::dirichlet, opts.dirichlet_value}});
      pt.n_triangles = mesh->n_triangles();
      pt.converged = field.diagnostics.converged;
      pt.min_value = min_value(field, [&](const Vec2& x) { return x.x() <= opts.region_x; });
      pt.ok = true;
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
  };

  const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(deltas.size())));
  if (threads == 1) {
    for (std::size_t k = 0; k < deltas.size(); ++k) solve_one(k);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < deltas.size(); k += threads) solve_one(k);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<double> values;
  for (const auto& pt : rep.points) {
    if (!pt.ok) {
      rep.partial = true;
      break;
    }
    values.push_back(pt.min_value);
  }
  rep.classification = rep.partial ? TrendClass::inconclusive
                                   : classify_trend(values, opts.stabilize_tol, opts.decay_factor,
                                                    &rep.last_three_spread, &rep.total_factor);
  return rep;
}

} // namespace robin
