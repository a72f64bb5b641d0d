#pragma once

#include "robinlab/geometry.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace robin {

/// Geometric size decay toward singular vertices: the target size shrinks by
/// `ratio` per ring, `depth` rings deep. depth = 0 disables grading.
struct Grading {
  double ratio = 0.6;
  int depth = 0;
};

/// Grading whose innermost ring resolves `h_tip`:
/// depth = ceil(log(h_tip / h_target) / log(ratio)).
Grading grading_for_tip(double h_tip, double h_target, double ratio = 0.6);

struct MeshOptions {
  double min_angle_deg = 15.0;
  std::size_t max_triangles = 500000;
  /// A triangle is split when its circumradius exceeds this multiple of the
  /// local target size.
  double size_factor = 0.75;
};

struct MeshBoundaryEdge {
  int a = 0, b = 0; ///< node indices, oriented along the polygon (counterclockwise)
  EdgeTag tag = EdgeTag::robin;
  double beta = 1.0;
  int polygon_edge = -1;
  double length = 0.0;
};

/// Conforming triangulation of a PolygonDomain.
struct Mesh {
  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> triangles; ///< counterclockwise
  std::vector<MeshBoundaryEdge> boundary_edges;
  /// Skinny triangles accepted because they sit in a small input angle.
  std::vector<char> protected_triangle;
  std::vector<int> singular_nodes;
  double h_target = 0.0;
  Grading grading;

  std::size_t n_nodes() const { return nodes.size(); }
  std::size_t n_triangles() const { return triangles.size(); }
  double triangle_area(std::size_t t) const;
  double area() const;
};

/// Delaunay refinement (Ruppert-style: encroached-segment splitting with
/// concentric shells at small input angles, circumcenter insertion for
/// skinny or oversized triangles). Throws MeshBudgetExceeded when the
/// triangle count passes `opts.max_triangles`.
Mesh triangulate(const PolygonDomain& domain, double h_target, const Grading& grading = {},
                 const MeshOptions& opts = {});

struct MeshQuality {
  double min_angle_deg = 0.0;
  /// Minimum over triangles that are not protected.
  double min_angle_unprotected_deg = 0.0;
  double max_aspect = 0.0; ///< 1 for an equilateral triangle
  std::size_t n_nodes = 0;
  std::size_t n_tris = 0;
  std::size_t n_protected = 0;
};

MeshQuality mesh_quality_report(const Mesh& mesh);

/// Plain-text export: header line, node table, triangle table, tagged edge
/// table.
void write_mesh_text(const Mesh& mesh, std::ostream& out);

} // namespace robin
