#include "robinlab/geometry.hpp"

#include "robinlab/planar.hpp"
#include "robinlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace robin {

double unit_ball_volume(int d) {
  if (d < 0) throw InvalidArgument("unit_ball_volume: negative dimension");
  return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

namespace {

void check_cusp_args(const ProfileFunction& h, double t, int N) {
  if (N < 2) throw InvalidArgument("cusp geometry needs N >= 2");
  if (!(t >= 0.0) || t > h.t_max() * (1 + 1e-12)) {
    std::ostringstream msg;
    msg << "cusp geometry: t = " << t << " outside (0, " << h.t_max() << "]";
    throw InvalidArgument(msg.str());
  }
}

} // namespace

double cusp_volume(const ProfileFunction& h, double t, int N) {
  check_cusp_args(h, t, N);
  if (t == 0.0) return 0.0;
  const auto r = quad::integrate_from_zero([&](double s) { return std::pow(h(s), N - 1); }, t);
  return unit_ball_volume(N - 1) * r.value;
}

double cusp_exterior_perimeter(const ProfileFunction& h, double t, int N) {
  check_cusp_args(h, t, N);
  if (t == 0.0) return 0.0;
  const auto r = quad::integrate_from_zero(
      [&](double s) {
        const double d = h.derivative(s);
        return std::pow(h(s), N - 2) * std::sqrt(1.0 + d * d);
      },
      t);
  return (N - 1) * unit_ball_volume(N - 1) * r.value;
}

double cusp_interior_perimeter(const ProfileFunction& h, double t, int N) {
  check_cusp_args(h, t, N);
  return unit_ball_volume(N - 1) * std::pow(h(t), N - 1);
}

double cusp_volume_convexity_bound(const ProfileFunction& h, double t, int N) {
  check_cusp_args(h, t, N);
  if (t == 0.0) return 0.0;
  const double d = h.derivative(t);
  if (!(d > 0.0)) throw InvalidArgument("cusp_volume_convexity_bound: degenerate derivative h'(t) = 0");
  return unit_ball_volume(N - 1) * std::pow(h(t), N) / ((2.0 * N - 2.0) * d);
}

std::string to_string(EdgeTag tag) {
  switch (tag) {
  case EdgeTag::robin: return "robin";
  case EdgeTag::dirichlet: return "dirichlet";
  case EdgeTag::truncation: return "truncation";
  }
  return "unknown";
}

EdgeTag edge_tag_from_string(const std::string& s) {
  if (s == "robin") return EdgeTag::robin;
  if (s == "dirichlet") return EdgeTag::dirichlet;
  if (s == "truncation") return EdgeTag::truncation;
  throw InvalidArgument("unknown edge tag '" + s + "'");
}

void PolygonDomain::validate() const {
  const std::size_t n = vertices.size();
  if (n < 3) throw InvalidArgument("polygon needs at least 3 vertices");
  if (edges.size() != n) throw InvalidArgument("polygon needs exactly one tagged edge per vertex");
  for (const auto& e : edges)
    if (!std::isfinite(e.beta) || e.beta < 0.0)
      throw InvalidArgument("edge beta must be finite and nonnegative");
  const double a = area();
  if (!(a > 0.0)) {
    if (a < 0.0) throw InvalidArgument("polygon must be counterclockwise (negative area)");
    throw InvalidArgument("polygon has zero area");
  }
  const double diam = diameter();
  for (std::size_t i = 0; i < n; ++i)
    if (edge_length(i) < 1e-12 * diam) throw InvalidArgument("degenerate polygon edge");
  for (int v : singular_vertices)
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidArgument("singular vertex index out of range");
  // Non-adjacent edges must not touch.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a0 = vertices[i];
    const Vec2& a1 = vertices[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (planar::segments_intersect<double>(a0, a1, vertices[j], vertices[(j + 1) % n]))
        throw InvalidArgument("polygon is not simple (edges intersect)");
    }
  }
}

double PolygonDomain::area() const {
  return planar::signed_area<double>(std::span<const Vec2>(vertices));
}

double PolygonDomain::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) d = std::max(d, (vertices[i] - vertices[j]).norm());
  return d;
}

double PolygonDomain::edge_length(std::size_t i) const {
  return (vertices[(i + 1) % vertices.size()] - vertices[i]).norm();
}

double PolygonDomain::exterior_length() const {
  double len = 0.0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (is_exterior(edges[i].tag)) len += edge_length(i);
  return len;
}

double PolygonDomain::max_beta() const {
  double b = 0.0;
  for (const auto& e : edges)
    if (is_exterior(e.tag)) b = std::max(b, e.beta);
  return b;
}

PolygonDomain make_polygon(std::vector<Vec2> vertices, EdgeTag tag, double beta) {
  PolygonDomain d;
  d.edges.assign(vertices.size(), BoundaryEdge{tag, beta});
  d.vertices = std::move(vertices);
  d.validate();
  return d;
}

PolygonDomain make_rectangle(double x0, double y0, double x1, double y1, double beta) {
  return make_polygon({Vec2(x0, y0), Vec2(x1, y0), Vec2(x1, y1), Vec2(x0, y1)}, EdgeTag::robin, beta);
}

PolygonDomain make_regular_polygon(int n, double radius, double beta) {
  if (n < 3) throw InvalidArgument("regular polygon needs n >= 3");
  std::vector<Vec2> v;
  v.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n;
    v.emplace_back(radius * std::cos(th), radius * std::sin(th));
  }
  return make_polygon(std::move(v), EdgeTag::robin, beta);
}

PolygonDomain build_cusp_polygon(const ProfileFunction& h, double x_min, double x_max, int n_boundary,
                                 const CuspPolygonOptions& opts) {
  if (n_boundary < 8) throw InvalidArgument("build_cusp_polygon: n_boundary must be >= 8");
  if (!(x_min >= 0.0) || !(x_max > x_min) || x_max > h.t_max() * (1 + 1e-12))
    throw InvalidArgument("build_cusp_polygon: need 0 <= x_min < x_max <= t_max");
  if (!(opts.grading >= 1.0)) throw InvalidArgument("build_cusp_polygon: grading must be >= 1");

  const bool tip = x_min == 0.0;
  // Samples per graph, including the shared tip when present.
  const int k = tip ? (n_boundary + 1) / 2 : n_boundary / 2;
  std::vector<double> xs(k);
  for (int j = 0; j < k; ++j) {
    const double s = static_cast<double>(j) / (k - 1);
    const double g = opts.grading == 1.0 ? s : (std::pow(opts.grading, s) - 1.0) / (opts.grading - 1.0);
    xs[j] = x_min + (x_max - x_min) * g;
  }
  xs.back() = x_max;

  PolygonDomain d;
  // Lower graph left to right.
  for (int j = 0; j < k; ++j) d.vertices.emplace_back(xs[j], j == 0 && tip ? 0.0 : -h(xs[j]));
  // Upper graph right to left.
  for (int j = k - 1; j >= (tip ? 1 : 0); --j) d.vertices.emplace_back(xs[j], h(xs[j]));

  const std::size_t n = d.vertices.size();
  d.edges.assign(n, BoundaryEdge{EdgeTag::robin, opts.beta});
  // Edge k-1 joins the last lower vertex to the first upper vertex.
  d.edges[k - 1].tag = opts.right_tag;
  if (tip)
    d.singular_vertices.push_back(0);
  else
    d.edges[n - 1].tag = EdgeTag::truncation;
  d.validate();
  return d;
}

} // namespace robin
