#include "robinlab/levelsets.hpp"

#include "robinlab/planar.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace robin {

namespace {

double value_scale(const Eigen::VectorXd& u) {
  const double s = u.size() ? u.cwiseAbs().maxCoeff() : 0.0;
  return s > 0.0 ? s : 1.0;
}

/// Moves t off the nodal values so every level line crosses edges transversally.
double perturb_off_nodes(const Eigen::VectorXd& u, double t) {
  const double bump = 1e-14 * value_scale(u);
  for (int guard = 0; guard < 8; ++guard) {
    bool hit = false;
    for (Eigen::Index i = 0; i < u.size() && !hit; ++i) hit = u[i] == t;
    if (!hit) break;
    t += bump;
  }
  return t;
}

} // namespace

LevelStats sublevel_stats(const SolutionField& field, double t_in) {
  const Mesh& mesh = *field.mesh;
  const Eigen::VectorXd& u = field.u;
  LevelStats s;
  s.t = t_in;
  const double lo = u.minCoeff(), hi = u.maxCoeff();
  const double margin = 1e-9 * (hi - lo + value_scale(u));
  double t = t_in;
  if (t < lo - margin || t > hi + margin) {
    s.clamped = true;
    t = std::clamp(t, lo - margin, hi + margin);
  }
  t = perturb_off_nodes(u, t);
  const double p = field.params.p;

  for (std::size_t k = 0; k < mesh.n_triangles(); ++k) {
    const auto& tri = mesh.triangles[k];
    const std::array<double, 3> val{u[tri[0]], u[tri[1]], u[tri[2]]};
    const int below = (val[0] < t) + (val[1] < t) + (val[2] < t);
    if (below == 0) continue;
    const std::array<Vec2, 3> x{mesh.nodes[tri[0]], mesh.nodes[tri[1]], mesh.nodes[tri[2]]};
    const double area = mesh.triangle_area(k);
    const Vec2 grad = [&] {
      const double inv = 1.0 / (2.0 * area);
      Vec2 gsum = Vec2::Zero();
      for (int i = 0; i < 3; ++i) {
        const Vec2 e = x[(i + 2) % 3] - x[(i + 1) % 3];
        gsum += val[i] * Vec2(-e.y(), e.x()) * inv;
      }
      return gsum;
    }();
    double clipped = area;
    if (below < 3) {
      std::vector<Vec2> poly;
      std::array<Vec2, 2> cross{};
      int nc = 0;
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        if (val[i] < t) poly.push_back(x[i]);
        if ((val[i] < t) != (val[j] < t)) {
          const double lam = (t - val[i]) / (val[j] - val[i]);
          const Vec2 c = x[i] + lam * (x[j] - x[i]);
          poly.push_back(c);
          cross[nc++] = c;
        }
      }
      clipped = std::abs(planar::signed_area<double>(std::span<const Vec2>(poly)));
      if (nc == 2) s.Pi += (cross[1] - cross[0]).norm();
    }
    const double gn = grad.norm();
    s.volume += clipped;
    s.g += gn * clipped;
    s.gp += std::pow(gn, p) * clipped;
  }

  for (const auto& e : mesh.boundary_edges) {
    if (!is_exterior(e.tag)) continue;
    const double ua = u[e.a], ub = u[e.b];
    double frac;
    if (ua < t && ub < t)
      frac = 1.0;
    else if (ua >= t && ub >= t)
      frac = 0.0;
    else
      frac = ua < t ? (t - ua) / (ub - ua) : (t - ub) / (ua - ub);
    s.Pe += frac * e.length;
    s.Pe_beta += frac * e.length * edge_beta(e, field.params);
  }
  return s;
}

CaccioppoliCheck check_caccioppoli(const SolutionField& field, double t, double operator_constant, double tol) {
  const LevelStats s = sublevel_stats(field, t);
  CaccioppoliCheck c;
  c.t = t;
  c.lhs = s.gp;
  c.rhs = operator_constant * std::pow(std::max(t, 0.0), field.params.p) * s.Pe_beta;
  c.ok = c.lhs <= c.rhs * (1.0 + tol) || c.lhs == 0.0;
  return c;
}

GBoundCheck check_g_bound(const SolutionField& field, double t, double operator_constant, double tol) {
  const LevelStats s = sublevel_stats(field, t);
  const double p = field.params.p;
  GBoundCheck c;
  c.t = t;
  c.g = s.g;
  c.bound = std::max(t, 0.0) * std::pow(operator_constant * s.Pe_beta, 1.0 / p) *
            std::pow(s.volume, 1.0 / field.params.p_conjugate());
  c.ok = c.g <= c.bound * (1.0 + tol) || c.g == 0.0;
  return c;
}

std::vector<double> interior_grid(double lo, double hi, int n) {
  if (n < 1) throw InvalidArgument("interior_grid: need at least one point");
  if (!(hi > lo)) throw InvalidArgument("interior_grid: empty interval");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * (i + 1) / (n + 1);
  return out;
}

std::vector<double> cosine_grid(double lo, double hi, int n) {
  if (n < 2) throw InvalidArgument("cosine_grid: need at least two points");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * 0.5 * (1.0 - std::cos(kPi * i / (n - 1)));
  out.front() = lo;
  out.back() = hi;
  return out;
}

CoareaCheck check_coarea(const SolutionField& field, double T, int n) {
  const double lo = field.u.minCoeff();
  if (!(T > lo)) throw InvalidArgument("check_coarea: T must exceed min u");
  const auto grid = cosine_grid(lo, T, n);
  CoareaCheck c;
  c.T = T;
  double prev = sublevel_stats(field, grid[0]).Pi;
  for (int i = 1; i < n; ++i) {
    const double cur = sublevel_stats(field, grid[i]).Pi;
    c.integral += 0.5 * (prev + cur) * (grid[i] - grid[i - 1]);
    prev = cur;
  }
  c.g = sublevel_stats(field, T).g;
  c.rel_error = std::abs(c.integral - c.g) / std::max(std::abs(c.g), 1e-300);
  return c;
}

void write_level_stats_csv(const SolutionField& field, const std::vector<double>& t_grid, std::ostream& out,
                           double operator_constant, double tol) {
  out.precision(12);
  out << "t,volume,Pe,Pi,g,gp,caccioppoli_rhs,g_bound,caccioppoli_ok,g_bound_ok\n";
  for (double t : t_grid) {
    const LevelStats s = sublevel_stats(field, t);
    const auto cc = check_caccioppoli(field, t, operator_constant, tol);
    const auto gb = check_g_bound(field, t, operator_constant, tol);
    out << t << ',' << s.volume << ',' << s.Pe << ',' << s.Pi << ',' << s.g << ',' << s.gp << ',' << cc.rhs << ','
        << gb.bound << ',' << (cc.ok ? 1 : 0) << ',' << (gb.ok ? 1 : 0) << '\n';
  }
}

} // namespace robin
