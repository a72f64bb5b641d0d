#pragma once

#include "robinlab/common.hpp"
#include "robinlab/profile_function.hpp"

#include <string>
#include <vector>

namespace robin {

/// Volume of the unit ball of R^d (1 -> 2, 2 -> pi, 3 -> 4pi/3).
double unit_ball_volume(int d);

// Geometry of the revolution cusp {x1 > 0, |x'| < h(x1)} truncated at
// x1 <= t, in R^N. The prefactor convention is the unit-ball volume of
// R^(N-1), so N = 2 gives |Omega_t| = 2 int h.

/// |Omega_t| = a_{N-1} int_0^t h^{N-1}.
double cusp_volume(const ProfileFunction& h, double t, int N);
/// Lateral measure (N-1) a_{N-1} int_0^t h^{N-2} sqrt(1 + h'^2).
double cusp_exterior_perimeter(const ProfileFunction& h, double t, int N);
/// Cross-section measure a_{N-1} h(t)^{N-1}.
double cusp_interior_perimeter(const ProfileFunction& h, double t, int N);
/// a_{N-1} h(t)^N / ((2N-2) h'(t)); a lower bound of cusp_volume when h^{N-1}
/// is convex.
double cusp_volume_convexity_bound(const ProfileFunction& h, double t, int N);

enum class EdgeTag { robin, dirichlet, truncation };

std::string to_string(EdgeTag tag);
EdgeTag edge_tag_from_string(const std::string& s);

/// Robin and truncation edges carry the boundary energy; dirichlet edges are
/// constrained.
inline bool is_exterior(EdgeTag tag) { return tag != EdgeTag::dirichlet; }

struct BoundaryEdge {
  EdgeTag tag = EdgeTag::robin;
  double beta = 1.0;
};

/// Simple counterclockwise polygon; edge i joins vertex i to vertex i+1.
struct PolygonDomain {
  std::vector<Vec2> vertices;
  std::vector<BoundaryEdge> edges;
  std::vector<int> singular_vertices;

  /// Throws InvalidArgument unless the invariants hold (simple, CCW,
  /// positive area, one tag per edge, finite nonnegative beta).
  void validate() const;

  double area() const;
  double diameter() const;
  double edge_length(std::size_t i) const;
  /// Total length of robin and truncation edges.
  double exterior_length() const;
  /// Largest beta among robin and truncation edges.
  double max_beta() const;
  std::size_t size() const { return vertices.size(); }
};

PolygonDomain make_polygon(std::vector<Vec2> vertices, EdgeTag tag = EdgeTag::robin,
                           double beta = 1.0);
PolygonDomain make_rectangle(double x0, double y0, double x1, double y1, double beta = 1.0);
/// Regular n-gon inscribed in the circle of radius R, first vertex at (R, 0).
PolygonDomain make_regular_polygon(int n, double radius, double beta = 1.0);

struct CuspPolygonOptions {
  EdgeTag right_tag = EdgeTag::dirichlet;
  double beta = 1.0;
  /// Ratio between the largest and smallest sample spacing on each graph.
  double grading = 1e3;
};

/// Polygonal approximation of the cusp between x_min and x_max. Graph edges are
/// robin, the right cross-section gets `right_tag`, the left one (x_min > 0)
/// is tagged truncation; with x_min = 0 the tip vertex is marked singular.
PolygonDomain build_cusp_polygon(const ProfileFunction& h, double x_min, double x_max,
                                 int n_boundary, const CuspPolygonOptions& opts = {});

} // namespace robin
