#pragma once

#include "robinlab/geometry.hpp"

#include <variant>

namespace robin {

struct Disk {
  Vec2 center;
  double radius;
};

/// Closed axis-aligned square of half side `half` around `center`.
struct AxisSquare {
  Vec2 center;
  double half;
};

/// {x : normal . x <= offset}
struct HalfPlane {
  Vec2 normal;
  double offset;
};

using ConvexRegion = std::variant<Disk, AxisSquare, HalfPlane>;

/// Measures of the set omega = domain ∩ region.
struct RegionMeasures {
  double volume = 0.0;
  double Pe = 0.0;      ///< robin and truncation boundary of the domain inside the region
  double Pe_beta = 0.0; ///< the same, weighted by edge beta
  /// Boundary of omega interior to the domain, plus dirichlet boundary pieces.
  double Pi = 0.0;
};

/// Exact measures: boundary pieces by intersection with the region boundary,
/// area by Green's theorem over both boundary parts.
RegionMeasures intersect(const PolygonDomain& domain, const ConvexRegion& region);

/// {x in domain : dist(x, boundary) < d} for a convex domain.
RegionMeasures boundary_layer(const PolygonDomain& domain, double d);

bool is_convex(const PolygonDomain& domain);

} // namespace robin
