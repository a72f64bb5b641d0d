#include "robinlab/regions.hpp"

#include "robinlab/planar.hpp"

#include <algorithm>
#include <cmath>

namespace robin {

namespace {

using planar::cross;

bool strictly_inside(const ConvexRegion& region, const Vec2& x) {
  return std::visit(
      [&](const auto& r) -> bool {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Disk>)
          return (x - r.center).squaredNorm() < r.radius * r.radius;
        else if constexpr (std::is_same_v<R, AxisSquare>)
          return (x - r.center).cwiseAbs().maxCoeff() < r.half;
        else
          return r.normal.dot(x) < r.offset;
      },
      region);
}

/// Parameter of the crossing of [a, b] with the line through c in direction d.
bool segment_line(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d, double& lam, double& mu) {
  const Vec2 ab = b - a;
  const double den = cross<double>(ab, d);
  if (den == 0.0) return false;
  lam = cross<double>(c - a, d) / den;
  mu = cross<double>(c - a, ab) / den;
  return true;
}

void circle_params(const Vec2& a, const Vec2& b, const Vec2& c, double r, std::vector<double>& out) {
  const Vec2 ab = b - a, ac = a - c;
  const double qa = ab.squaredNorm(), qb = 2.0 * ab.dot(ac), qc = ac.squaredNorm() - r * r;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0) return;
  const double sq = std::sqrt(disc);
  // Stable roots.
  const double q = -0.5 * (qb + std::copysign(sq, qb));
  for (double lam : {q / qa, qc / q})
    if (lam > 0.0 && lam < 1.0) out.push_back(lam);
}

/// Line segments bounding the region, counterclockwise around it. Half-planes
/// are cut to a box that contains the domain.
std::vector<std::pair<Vec2, Vec2>> region_segments(const ConvexRegion& region, const Vec2& lo, const Vec2& hi) {
  std::vector<std::pair<Vec2, Vec2>> segs;
  if (const auto* s = std::get_if<AxisSquare>(&region)) {
    const Vec2 c = s->center;
    const double h = s->half;
    const std::array<Vec2, 4> q{c + Vec2(-h, -h), c + Vec2(h, -h), c + Vec2(h, h), c + Vec2(-h, h)};
    for (int i = 0; i < 4; ++i) segs.emplace_back(q[i], q[(i + 1) % 4]);
  } else if (const auto* hp = std::get_if<HalfPlane>(&region)) {
    const double nn = hp->normal.squaredNorm();
    const Vec2 base = hp->normal * (hp->offset / nn);
    const Vec2 dir = Vec2(-hp->normal.y(), hp->normal.x()) / std::sqrt(nn);
    const double reach = (hi - lo).norm() + (0.5 * (lo + hi) - base).norm() + 1.0;
    const Vec2 mid = base + dir * dir.dot(0.5 * (lo + hi) - base);
    segs.emplace_back(mid - reach * dir, mid + reach * dir);
  }
  return segs;
}

} // namespace

RegionMeasures intersect(const PolygonDomain& domain, const ConvexRegion& region) {
  const auto& v = domain.vertices;
  const std::size_t n = v.size();
  RegionMeasures out;
  double green = 0.0; // twice the area

  Vec2 lo = v[0], hi = v[0];
  for (const auto& x : v) {
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(x);
  }
  const auto rsegs = region_segments(region, lo, hi);
  const Disk* disk = std::get_if<Disk>(&region);

  // Domain boundary inside the region.
  std::vector<double> lam;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    lam.assign({0.0, 1.0});
    if (disk) {
      circle_params(a, b, disk->center, disk->radius, lam);
    } else {
      for (const auto& [c, e] : rsegs) {
        double l, mu;
        if (segment_line(a, b, c, e - c, l, mu) && l > 0.0 && l < 1.0 && mu >= 0.0 && mu <= 1.0) lam.push_back(l);
      }
    }
    std::sort(lam.begin(), lam.end());
    const double len = (b - a).norm();
    const auto& edge = domain.edges[i];
    for (std::size_t k = 0; k + 1 < lam.size(); ++k) {
      if (lam[k + 1] <= lam[k]) continue;
      const Vec2 p0 = a + lam[k] * (b - a), p1 = a + lam[k + 1] * (b - a);
      if (!strictly_inside(region, 0.5 * (p0 + p1))) continue;
      const double piece = (lam[k + 1] - lam[k]) * len;
      if (is_exterior(edge.tag)) {
        out.Pe += piece;
        out.Pe_beta += piece * edge.beta;
      } else {
        out.Pi += piece;
      }
      green += cross<double>(p0, p1);
    }
  }

  // Region boundary inside the domain.
  auto inside_domain = [&](const Vec2& x) { return planar::point_in_polygon<double>(std::span<const Vec2>(v), x); };
  if (disk) {
    const Vec2 c = disk->center;
    const double r = disk->radius;
    std::vector<double> th;
    std::vector<double> l;
    for (std::size_t i = 0; i < n; ++i) {
      l.clear();
      circle_params(v[i], v[(i + 1) % n], c, r, l);
      for (double x : l) {
        const Vec2 pnt = v[i] + x * (v[(i + 1) % n] - v[i]) - c;
        double a = std::atan2(pnt.y(), pnt.x());
        if (a < 0) a += 2 * kPi;
        th.push_back(a);
      }
    }
    std::sort(th.begin(), th.end());
    if (th.empty()) th.push_back(0.0);
    th.push_back(th.front() + 2 * kPi);
    for (std::size_t k = 0; k + 1 < th.size(); ++k) {
      const double t0 = th[k], t1 = th[k + 1];
      if (t1 <= t0) continue;
      const double tm = 0.5 * (t0 + t1);
      if (!inside_domain(c + r * Vec2(std::cos(tm), std::sin(tm)))) continue;
      out.Pi += r * (t1 - t0);
      green += r * r * (t1 - t0) + r * c.x() * (std::sin(t1) - std::sin(t0)) - r * c.y() * (std::cos(t1) - std::cos(t0));
    }
  } else {
    for (const auto& [a, b] : rsegs) {
      lam.assign({0.0, 1.0});
      for (std::size_t i = 0; i < n; ++i) {
        double l, mu;
        const Vec2& c = v[i];
        const Vec2 e = v[(i + 1) % n] - c;
        if (segment_line(a, b, c, e, l, mu) && l > 0.0 && l < 1.0 && mu >= 0.0 && mu <= 1.0) lam.push_back(l);
      }
      std::sort(lam.begin(), lam.end());
      for (std::size_t k = 0; k + 1 < lam.size(); ++k) {
        if (lam[k + 1] <= lam[k]) continue;
        const Vec2 p0 = a + lam[k] * (b - a), p1 = a + lam[k + 1] * (b - a);
        if (!inside_domain(0.5 * (p0 + p1))) continue;
        out.Pi += (p1 - p0).norm();
        green += cross<double>(p0, p1);
      }
    }
  }
  out.volume = std::max(0.0, 0.5 * green);
  return out;
}

bool is_convex(const PolygonDomain& domain) {
  const auto& v = domain.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cross<double>(v[(i + 1) % n] - v[i], v[(i + 2) % n] - v[(i + 1) % n]) < 0.0) return false;
  return true;
}

RegionMeasures boundary_layer(const PolygonDomain& domain, double d) {
  if (!is_convex(domain)) throw InvalidArgument("boundary_layer: domain must be convex");
  if (!(d > 0.0)) throw InvalidArgument("boundary_layer: distance must be positive");
  const auto& v = domain.vertices;
  const std::size_t n = v.size();
  std::vector<Vec2> inner(v.begin(), v.end());
  for (std::size_t i = 0; i < n && !inner.empty(); ++i) {
    const Vec2 e = v[(i + 1) % n] - v[i];
    const Vec2 nrm = Vec2(e.y(), -e.x()).normalized(); // outward
    const double off = nrm.dot(v[i]) - d;
    std::vector<Vec2> next;
    const std::size_t m = inner.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Vec2& p = inner[k];
      const Vec2& q = inner[(k + 1) % m];
      const double sp = nrm.dot(p) - off, sq = nrm.dot(q) - off;
      if (sp <= 0.0) next.push_back(p);
      if ((sp < 0.0) != (sq < 0.0) && sp != 0.0 && sq != 0.0) next.push_back(p + (sp / (sp - sq)) * (q - p));
    }
    inner = std::move(next);
  }
  RegionMeasures out;
  double inner_area = 0.0, inner_perimeter = 0.0;
  if (inner.size() >= 3) {
    inner_area = planar::signed_area<double>(std::span<const Vec2>(inner));
    inner_perimeter = planar::perimeter<double>(std::span<const Vec2>(inner));
  }
  out.volume = domain.area() - inner_area;
  out.Pi = inner_perimeter;
  for (std::size_t i = 0; i < n; ++i) {
    const double len = domain.edge_length(i);
    if (is_exterior(domain.edges[i].tag)) {
      out.Pe += len;
      out.Pe_beta += len * domain.edges[i].beta;
    } else {
      out.Pi += len;
    }
  }
  return out;
}

} // namespace robin
