#pragma once

// Small planar-geometry kernel shared by the domain, mesh and profile code.
// Everything is templated on the scalar so the same routines serve double
// evaluation and the extended-precision checks in the tests.

#include "robinlab/common.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace robin::planar {

template <typename Scalar>
Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Shoelace signed area; positive for counterclockwise vertex order.
template <typename Scalar>
Scalar signed_area(std::span<const Point2<Scalar>> poly) {
  Scalar twice = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(poly[i], poly[(i + 1) % n]);
  return twice / 2;
}

template <typename Scalar>
Scalar perimeter(std::span<const Point2<Scalar>> poly) {
  Scalar len = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) len += (poly[(i + 1) % n] - poly[i]).norm();
  return len;
}

template <typename Scalar>
Scalar triangle_signed_area(const Point2<Scalar>& a, const Point2<Scalar>& b,
                            const Point2<Scalar>& c) {
  return cross<Scalar>(b - a, c - a) / 2;
}

/// Interior angles of triangle abc in radians, ordered as the vertices.
template <typename Scalar>
std::array<Scalar, 3> triangle_angles(const Point2<Scalar>& a, const Point2<Scalar>& b,
                                      const Point2<Scalar>& c) {
  auto angle_at = [](const Point2<Scalar>& o, const Point2<Scalar>& u, const Point2<Scalar>& v) {
    const Point2<Scalar> du = u - o, dv = v - o;
    using std::atan2;
    using std::abs;
    return atan2(abs(cross<Scalar>(du, dv)), du.dot(dv));
  };
  return {angle_at(a, b, c), angle_at(b, c, a), angle_at(c, a, b)};
}

template <typename Scalar>
Scalar triangle_min_angle(const Point2<Scalar>& a, const Point2<Scalar>& b,
                          const Point2<Scalar>& c) {
  const auto ang = triangle_angles(a, b, c);
  return std::min({ang[0], ang[1], ang[2]});
}

/// Circumcenter, computed relative to `a` to limit cancellation.
template <typename Scalar>
Point2<Scalar> circumcenter(const Point2<Scalar>& a, const Point2<Scalar>& b,
                            const Point2<Scalar>& c) {
  const Point2<Scalar> ab = b - a, ac = c - a;
  const Scalar d = 2 * cross<Scalar>(ab, ac);
  const Scalar ab2 = ab.squaredNorm(), ac2 = ac.squaredNorm();
  return a + Point2<Scalar>((ac.y() * ab2 - ab.y() * ac2) / d, (ab.x() * ac2 - ac.x() * ab2) / d);
}

/// Crossing-number test; points on the boundary may go either way.
template <typename Scalar>
bool point_in_polygon(std::span<const Point2<Scalar>> poly, const Point2<Scalar>& p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto& pi = poly[i];
    const auto& pj = poly[j];
    if ((pi.y() > p.y()) != (pj.y() > p.y())) {
      const Scalar x = pj.x() + (p.y() - pj.y()) * (pi.x() - pj.x()) / (pi.y() - pj.y());
      if (p.x() < x) inside = !inside;
    }
  }
  return inside;
}

/// Distance from p to the closed segment [a, b].
template <typename Scalar>
Scalar point_segment_distance(const Point2<Scalar>& p, const Point2<Scalar>& a,
                              const Point2<Scalar>& b) {
  const Point2<Scalar> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  Scalar s = len2 > 0 ? (p - a).dot(ab) / len2 : Scalar(0);
  s = std::clamp(s, Scalar(0), Scalar(1));
  return (p - (a + s * ab)).norm();
}

/// Proper intersection test of closed segments [a,b] and [c,d].
template <typename Scalar>
bool segments_intersect(const Point2<Scalar>& a, const Point2<Scalar>& b,
                        const Point2<Scalar>& c, const Point2<Scalar>& d) {
  auto orient = [](const Point2<Scalar>& p, const Point2<Scalar>& q, const Point2<Scalar>& r) {
    const Scalar v = cross<Scalar>(q - p, r - p);
    return (v > 0) - (v < 0);
  };
  auto on_segment = [](const Point2<Scalar>& p, const Point2<Scalar>& q, const Point2<Scalar>& r) {
    return std::min(p.x(), q.x()) <= r.x() && r.x() <= std::max(p.x(), q.x()) &&
           std::min(p.y(), q.y()) <= r.y() && r.y() <= std::max(p.y(), q.y());
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

} // namespace robin::planar
