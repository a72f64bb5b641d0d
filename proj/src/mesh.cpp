#include "robinlab/mesh.hpp"

#include "robinlab/planar.hpp"
#include "robinlab/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace robin {

Grading grading_for_tip(double h_tip, double h_target, double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw InvalidArgument("grading ratio must lie in (0, 1)");
  if (!(h_tip > 0.0) || !(h_target > 0.0)) throw InvalidArgument("grading sizes must be positive");
  Grading g;
  g.ratio = ratio;
  g.depth = h_tip >= h_target ? 0 : static_cast<int>(std::ceil(std::log(h_tip / h_target) / std::log(ratio)));
  return g;
}

double Mesh::triangle_area(std::size_t t) const {
  const auto& tri = triangles[t];
  return planar::triangle_signed_area<double>(nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]);
}

double Mesh::area() const {
  double a = 0.0;
  for (std::size_t t = 0; t < triangles.size(); ++t) a += triangle_area(t);
  return a;
}

namespace {

using predicates::incircle;
using predicates::orient2d;

constexpr double kRad = kPi / 180.0;

class DelaunayRefiner {
public:
  DelaunayRefiner(const PolygonDomain& domain, double h_target, const Grading& grading, const MeshOptions& opts)
      : domain_(domain), h_target_(h_target), grading_(grading), opts_(opts) {
    diameter_ = domain.diameter();
    min_angle_ = opts.min_angle_deg * kRad;
    classify_polygon_vertices();
  }

  Mesh run() {
    build_super_triangle();
    const std::size_t n = domain_.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      VertexInfo info;
      info.polygon_vertex = static_cast<int>(i);
      if (insert_point(domain_.vertices[i], info) < 0) throw InvalidArgument("duplicate polygon vertex");
    }
    for (std::size_t i = 0; i < n; ++i) add_segment(static_cast<int>(i) + 3, static_cast<int>((i + 1) % n) + 3, static_cast<int>(i));
    for (std::size_t s = 0; s < segs_.size(); ++s) seg_queue_.push_back(static_cast<int>(s));
    recover_segments();

    for (std::size_t t = 0; t < tris_.size(); ++t)
      if (tris_[t].alive) consider(static_cast<int>(t));
    refine();
    return extract();
  }

private:
  struct Tri {
    std::array<int, 3> v{};
    std::array<int, 3> nb{-1, -1, -1}; // nb[i] is across the edge opposite v[i]
    bool alive = false;
    bool inside = false;
  };
  struct Seg {
    int a = 0, b = 0;
    int input_edge = 0;
    bool alive = true;
  };
  struct VertexInfo {
    int polygon_vertex = -1; // index into the input polygon, if any
    int input_edge = -1;     // input edge the vertex was inserted on, if any
  };
  struct Pending {
    int tri;
    std::array<int, 3> v;
  };

  // --- setup -------------------------------------------------------------

  void classify_polygon_vertices() {
    const std::size_t n = domain_.vertices.size();
    apex_.assign(n, false);
    apex_tiny_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& prev = domain_.vertices[(i + n - 1) % n];
      const Vec2& cur = domain_.vertices[i];
      const Vec2& next = domain_.vertices[(i + 1) % n];
      const Vec2 u = next - cur, w = prev - cur;
      double ang = std::atan2(planar::cross<double>(u, w), u.dot(w));
      if (ang < 0) ang += 2 * kPi;
      if (ang < 60.0 * kRad) apex_[i] = true;
      if (ang < min_angle_) apex_tiny_[i] = true;
    }
    for (int v : domain_.singular_vertices) {
      apex_[v] = true;
      singular_.push_back(domain_.vertices[v]);
    }
  }

  void build_super_triangle() {
    Vec2 lo = domain_.vertices[0], hi = lo;
    for (const auto& p : domain_.vertices) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    const Vec2 c = 0.5 * (lo + hi);
    const double r = 50.0 * std::max(diameter_, 1e-300);
    for (int k = 0; k < 3; ++k) {
      const double th = kPi / 2 + 2 * kPi * k / 3;
      pts_.emplace_back(c.x() + r * std::cos(th), c.y() + r * std::sin(th));
      info_.push_back({});
    }
    Tri t;
    t.v = {0, 1, 2};
    t.alive = true;
    tris_.push_back(t);
    vert_tri_.assign(3, 0);
    alive_count_ = 1;
  }

  // --- sizing ------------------------------------------------------------

  double target_size(const Vec2& x) const {
    double s = h_target_;
    if (grading_.depth > 0) {
      const double floor = h_target_ * std::pow(grading_.ratio, grading_.depth);
      for (const auto& v : singular_) s = std::min(s, std::max(floor, (1.0 - grading_.ratio) * (x - v).norm()));
    }
    return s;
  }

  // --- triangulation primitives -----------------------------------------

  bool is_super(int v) const { return v < 3; }

  static std::uint64_t key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  int new_tri() {
    int t;
    if (!free_.empty()) {
      t = free_.back();
      free_.pop_back();
      tris_[t] = Tri{};
    } else {
      t = static_cast<int>(tris_.size());
      tris_.emplace_back();
    }
    tris_[t].alive = true;
    ++alive_count_;
    return t;
  }

  void kill_tri(int t) {
    tris_[t].alive = false;
    free_.push_back(t);
    --alive_count_;
  }

  int locate(const Vec2& p, int start) const {
    int t = start;
    if (t < 0 || !tris_[t].alive) {
      t = -1;
      for (std::size_t i = tris_.size(); i-- > 0;)
        if (tris_[i].alive) {
          t = static_cast<int>(i);
          break;
        }
    }
    unsigned rot = 0;
    for (std::size_t steps = 0; steps < 4 * tris_.size() + 100; ++steps) {
      const Tri& tri = tris_[t];
      bool moved = false;
      ++rot;
      for (int k = 0; k < 3; ++k) {
        const int i = static_cast<int>((k + rot) % 3);
        const Vec2& a = pts_[tri.v[(i + 1) % 3]];
        const Vec2& b = pts_[tri.v[(i + 2) % 3]];
        if (orient2d(a, b, p) < 0) {
          if (tri.nb[i] < 0) return -1; // outside the super triangle
          t = tri.nb[i];
          moved = true;
          break;
        }
      }
      if (!moved) return t;
    }
    throw Error("mesh point location did not terminate");
  }

  bool in_circumcircle(int t, const Vec2& p) const {
    const Tri& tri = tris_[t];
    return incircle(pts_[tri.v[0]], pts_[tri.v[1]], pts_[tri.v[2]], p) > 0;
  }

  /// Triangles whose circumcircle strictly contains p, grown from `seed`.
  std::vector<int> cavity(const Vec2& p, int seed) {
    std::vector<int> cav{seed};
    ++stamp_;
    if (mark_.size() < tris_.size()) mark_.resize(tris_.size(), 0);
    mark_[seed] = stamp_;
    for (std::size_t k = 0; k < cav.size(); ++k) {
      const Tri& tri = tris_[cav[k]];
      for (int i = 0; i < 3; ++i) {
        const int nb = tri.nb[i];
        if (nb < 0 || mark_[nb] == stamp_) continue;
        if (in_circumcircle(nb, p)) {
          mark_[nb] = stamp_;
          cav.push_back(nb);
        }
      }
    }
    return cav;
  }

  bool in_cavity(int t) const { return t >= 0 && mark_[t] == stamp_; }

  /// Retriangulates a cavity (computed by `cavity`) around p. Returns the new
  /// vertex index.
  int fill_cavity(const Vec2& p, const VertexInfo& info, const std::vector<int>& cav) {
    const int pv = static_cast<int>(pts_.size());
    pts_.push_back(p);
    info_.push_back(info);
    vert_tri_.push_back(-1);

    struct BoundaryEdge {
      int a, b, outside;
    };
    std::vector<BoundaryEdge> rim;
    for (int t : cav) {
      const Tri& tri = tris_[t];
      for (int i = 0; i < 3; ++i) {
        if (in_cavity(tri.nb[i])) continue;
        rim.push_back({tri.v[(i + 1) % 3], tri.v[(i + 2) % 3], tri.nb[i]});
      }
      // Segments touching the cavity must be re-examined.
      for (int i = 0; i < 3; ++i) {
        auto it = seg_index_.find(key(tri.v[i], tri.v[(i + 1) % 3]));
        if (it != seg_index_.end()) seg_queue_.push_back(it->second);
      }
    }
    for (int t : cav) kill_tri(t);

    std::unordered_map<int, int> starts, ends;
    starts.reserve(rim.size() * 2);
    ends.reserve(rim.size() * 2);
    created_.clear();
    for (const auto& e : rim) {
      const int t = new_tri();
      Tri& tri = tris_[t];
      tri.v = {pv, e.a, e.b};
      tri.nb = {e.outside, -1, -1};
      if (e.outside >= 0) {
        Tri& o = tris_[e.outside];
        for (int i = 0; i < 3; ++i)
          if (o.v[i] != e.a && o.v[i] != e.b) o.nb[i] = t;
      }
      starts[e.a] = t;
      ends[e.b] = t;
      vert_tri_[e.a] = t;
      vert_tri_[e.b] = t;
      created_.push_back(t);
    }
    for (int t : created_) {
      Tri& tri = tris_[t];
      tri.nb[1] = starts.at(tri.v[2]); // edge (b, p)
      tri.nb[2] = ends.at(tri.v[1]);   // edge (p, a)
      tri.inside = triangle_inside(t);
    }
    vert_tri_[pv] = created_.front();
    last_tri_ = created_.front();
    return pv;
  }

  int insert_point(const Vec2& p, const VertexInfo& info) {
    const int t = locate(p, last_tri_);
    if (t < 0) throw Error("mesh point outside the super triangle");
    for (int v : tris_[t].v)
      if (pts_[v] == p) return -1;
    const auto cav = cavity(p, t);
    return fill_cavity(p, info, cav);
  }

  bool triangle_inside(int t) const {
    const Tri& tri = tris_[t];
    for (int v : tri.v)
      if (is_super(v)) return false;
    const Vec2 c = (pts_[tri.v[0]] + pts_[tri.v[1]] + pts_[tri.v[2]]) / 3.0;
    return planar::point_in_polygon<double>(std::span<const Vec2>(domain_.vertices), c);
  }

  /// Triangle containing edge (a, b) with b following a, or -1.
  int find_edge(int a, int b) const {
    const int start = vert_tri_[a];
    if (start < 0) return -1;
    int t = start;
    for (std::size_t guard = 0; guard < 100000; ++guard) {
      const Tri& tri = tris_[t];
      int i = 0;
      while (tri.v[i] != a) ++i;
      if (tri.v[(i + 1) % 3] == b || tri.v[(i + 2) % 3] == b) return t;
      t = tri.nb[(i + 1) % 3];
      if (t < 0 || t == start) return -1;
    }
    return -1;
  }

  // --- segments ----------------------------------------------------------

  void add_segment(int a, int b, int input_edge) {
    const int s = static_cast<int>(segs_.size());
    segs_.push_back({a, b, input_edge, true});
    seg_index_[key(a, b)] = s;
  }

  static bool encroaches(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (a - c).dot(b - c) < 0.0;
  }

  bool segment_needs_split(int s) const {
    const Seg& seg = segs_[s];
    const Vec2& a = pts_[seg.a];
    const Vec2& b = pts_[seg.b];
    if ((b - a).norm() > target_size(0.5 * (a + b))) return true;
    const int t = find_edge(seg.a, seg.b);
    if (t < 0) return true; // missing from the triangulation
    const Tri& tri = tris_[t];
    for (int i = 0; i < 3; ++i) {
      const int v = tri.v[i];
      if (v == seg.a || v == seg.b) continue;
      if (!is_super(v) && encroaches(a, b, pts_[v])) return true;
      const int o = tri.nb[i];
      if (o >= 0)
        for (int w : tris_[o].v)
          if (w != seg.a && w != seg.b && !is_super(w) && encroaches(a, b, pts_[w])) return true;
    }
    return false;
  }

  bool vertex_is_apex(int v) const {
    const int pv = info_[v].polygon_vertex;
    return pv >= 0 && apex_[pv];
  }

  void split_segment(int s) {
    const Seg seg = segs_[s];
    const Vec2& a = pts_[seg.a];
    const Vec2& b = pts_[seg.b];
    const double len = (b - a).norm();
    if (len < 1e-12 * diameter_) throw MeshBudgetExceeded("segment refinement reached the length floor");
    double frac = 0.5;
    const bool apex_a = vertex_is_apex(seg.a), apex_b = vertex_is_apex(seg.b);
    if (apex_a != apex_b) {
      // Concentric shells: split at a power of two distance from the apex.
      const double d = std::exp2(std::round(std::log2(0.5 * len)));
      frac = apex_a ? d / len : 1.0 - d / len;
    }
    const Vec2 m = a + frac * (b - a);
    VertexInfo info;
    info.input_edge = seg.input_edge;
    segs_[s].alive = false;
    seg_index_.erase(key(seg.a, seg.b));
    const int t = locate(m, find_edge(seg.a, seg.b) >= 0 ? find_edge(seg.a, seg.b) : last_tri_);
    const auto cav = cavity(m, t);
    const int mv = fill_cavity(m, info, cav);
    add_segment(seg.a, mv, seg.input_edge);
    add_segment(mv, seg.b, seg.input_edge);
    seg_queue_.push_back(static_cast<int>(segs_.size()) - 2);
    seg_queue_.push_back(static_cast<int>(segs_.size()) - 1);
    for (int c : created_) pending_.push_back(c);
    check_budget();
  }

  void recover_segments() {
    while (!seg_queue_.empty()) {
      const int s = seg_queue_.front();
      seg_queue_.pop_front();
      if (!segs_[s].alive) continue;
      if (segment_needs_split(s)) split_segment(s);
    }
  }

  // --- quality -----------------------------------------------------------

  bool on_input_edge(int v, int e) const {
    const int pv = info_[v].polygon_vertex;
    const int n = static_cast<int>(domain_.vertices.size());
    if (pv >= 0) return e == pv || e == (pv + n - 1) % n;
    return info_[v].input_edge == e;
  }

  /// Edges (input polygon) adjacent to polygon vertex pv.
  std::array<int, 2> incident_edges(int pv) const {
    const int n = static_cast<int>(domain_.vertices.size());
    return {(pv + n - 1) % n, pv};
  }

  /// Skinny triangles whose small angle is forced by a small input angle.
  bool exempt(int t) const {
    const Tri& tri = tris_[t];
    for (int v : tri.v) {
      const int pv = info_[v].polygon_vertex;
      if (pv >= 0 && (apex_tiny_[pv] || (apex_[pv] && is_singular(pv)))) return true;
    }
    // Shortest edge spanning two segments that meet at an apex.
    int best = 0;
    double best_len = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
      const double l = (pts_[tri.v[(i + 1) % 3]] - pts_[tri.v[(i + 2) % 3]]).norm();
      if (l < best_len) {
        best_len = l;
        best = i;
      }
    }
    const int u = tri.v[(best + 1) % 3], w = tri.v[(best + 2) % 3];
    const std::size_t n = domain_.vertices.size();
    for (std::size_t pv = 0; pv < n; ++pv) {
      if (!apex_[pv]) continue;
      const auto e = incident_edges(static_cast<int>(pv));
      if ((on_input_edge(u, e[0]) && on_input_edge(w, e[1])) || (on_input_edge(u, e[1]) && on_input_edge(w, e[0])))
        return true;
    }
    return false;
  }

  bool is_singular(int pv) const {
    return std::find(domain_.singular_vertices.begin(), domain_.singular_vertices.end(), pv) !=
           domain_.singular_vertices.end();
  }

  bool skinny(int t) const {
    const Tri& tri = tris_[t];
    return planar::triangle_min_angle<double>(pts_[tri.v[0]], pts_[tri.v[1]], pts_[tri.v[2]]) < min_angle_;
  }

  bool oversized(int t) const {
    const Tri& tri = tris_[t];
    const Vec2& a = pts_[tri.v[0]];
    const Vec2& b = pts_[tri.v[1]];
    const Vec2& c = pts_[tri.v[2]];
    const double la = (b - c).norm(), lb = (c - a).norm(), lc = (a - b).norm();
    const double area = std::abs(planar::triangle_signed_area<double>(a, b, c));
    const double radius = la * lb * lc / (4.0 * area);
    return radius > opts_.size_factor * target_size((a + b + c) / 3.0);
  }

  bool bad(int t) const {
    if (!tris_[t].alive || !tris_[t].inside) return false;
    if (oversized(t)) return true;
    return skinny(t) && !exempt(t);
  }

  void consider(int t) {
    if (bad(t)) queue_.push_back({t, tris_[t].v});
  }

  void check_budget() const {
    if (alive_count_ > opts_.max_triangles + 16) {
      std::ostringstream msg;
      msg << "mesh refinement exceeded the budget of " << opts_.max_triangles << " triangles";
      throw MeshBudgetExceeded(msg.str());
    }
  }

  void flush_pending() {
    for (int t : pending_) consider(t);
    pending_.clear();
  }

  void refine() {
    while (!queue_.empty()) {
      const Pending item = queue_.front();
      queue_.pop_front();
      const int t = item.tri;
      if (!tris_[t].alive || tris_[t].v != item.v || !bad(t)) continue;
      const Tri& tri = tris_[t];
      const Vec2 c = planar::circumcenter<double>(pts_[tri.v[0]], pts_[tri.v[1]], pts_[tri.v[2]]);

      const int host = locate(c, t);
      if (host < 0) continue;
      bool duplicate = false;
      for (int v : tris_[host].v) duplicate |= pts_[v] == c;
      if (duplicate) continue;
      const auto cav = cavity(c, host);

      // Segments the circumcenter would encroach (or delete) are split
      // instead of inserting it.
      std::vector<int> hit;
      for (int ct : cav) {
        const Tri& ctri = tris_[ct];
        for (int i = 0; i < 3; ++i) {
          const int a = ctri.v[(i + 1) % 3], b = ctri.v[(i + 2) % 3];
          auto it = seg_index_.find(key(a, b));
          if (it == seg_index_.end()) continue;
          if (encroaches(pts_[a], pts_[b], c) || in_cavity(ctri.nb[i])) hit.push_back(it->second);
        }
      }
      const bool inside = planar::point_in_polygon<double>(std::span<const Vec2>(domain_.vertices), c);
      if (!hit.empty()) {
        std::sort(hit.begin(), hit.end());
        hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
        for (int s : hit)
          if (segs_[s].alive) split_segment(s);
        recover_segments();
        flush_pending();
        if (tris_[t].alive && tris_[t].v == item.v) queue_.push_back(item);
        continue;
      }
      if (!inside) continue; // cannot be repaired by this triangle
      VertexInfo info;
      fill_cavity(c, info, cav);
      for (int nt : created_) pending_.push_back(nt);
      check_budget();
      recover_segments();
      flush_pending();
    }
  }

  // --- output ------------------------------------------------------------

  Mesh extract() {
    for (const auto& s : segs_)
      if (s.alive && find_edge(s.a, s.b) < 0) throw Error("mesh lost a boundary segment");

    Mesh mesh;
    mesh.h_target = h_target_;
    mesh.grading = grading_;
    std::vector<int> remap(pts_.size(), -1);
    auto node = [&](int v) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(mesh.nodes.size());
        mesh.nodes.push_back(pts_[v]);
      }
      return remap[v];
    };
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      const Tri& tri = tris_[t];
      if (!tri.alive || !tri.inside) continue;
      mesh.protected_triangle.push_back(skinny(static_cast<int>(t)) && exempt(static_cast<int>(t)) ? 1 : 0);
      mesh.triangles.push_back({node(tri.v[0]), node(tri.v[1]), node(tri.v[2])});
    }
    for (const auto& s : segs_) {
      if (!s.alive) continue;
      MeshBoundaryEdge e;
      e.a = node(s.a);
      e.b = node(s.b);
      e.polygon_edge = s.input_edge;
      e.tag = domain_.edges[s.input_edge].tag;
      e.beta = domain_.edges[s.input_edge].beta;
      e.length = (pts_[s.a] - pts_[s.b]).norm();
      mesh.boundary_edges.push_back(e);
    }
    std::sort(mesh.boundary_edges.begin(), mesh.boundary_edges.end(), [](const auto& x, const auto& y) {
      return std::tie(x.polygon_edge, x.a) < std::tie(y.polygon_edge, y.a);
    });
    for (int v : domain_.singular_vertices) mesh.singular_nodes.push_back(node(v + 3));
    return mesh;
  }

  const PolygonDomain& domain_;
  double h_target_;
  Grading grading_;
  MeshOptions opts_;
  double diameter_ = 0.0;
  double min_angle_ = 0.0;
  std::vector<bool> apex_, apex_tiny_;
  std::vector<Vec2> singular_;

  std::vector<Vec2> pts_;
  std::vector<VertexInfo> info_;
  std::vector<Tri> tris_;
  std::vector<int> free_;
  std::vector<int> vert_tri_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  int last_tri_ = 0;
  std::size_t alive_count_ = 0;
  std::vector<int> created_;
  std::vector<int> pending_;

  std::vector<Seg> segs_;
  std::unordered_map<std::uint64_t, int> seg_index_;
  std::deque<int> seg_queue_;
  std::deque<Pending> queue_;
};

} // namespace

Mesh triangulate(const PolygonDomain& domain, double h_target, const Grading& grading, const MeshOptions& opts) {
  domain.validate();
  if (!(h_target > 0.0)) throw InvalidArgument("triangulate: h_target must be positive");
  if (!(grading.ratio > 0.0 && grading.ratio < 1.0)) throw InvalidArgument("triangulate: grading ratio must lie in (0, 1)");
  if (grading.depth < 0) throw InvalidArgument("triangulate: grading depth must be >= 0");
  if (!(opts.min_angle_deg > 0.0 && opts.min_angle_deg < 30.0))
    throw InvalidArgument("triangulate: minimum angle must lie in (0, 30) degrees");
  DelaunayRefiner refiner(domain, h_target, grading, opts);
  return refiner.run();
}

MeshQuality mesh_quality_report(const Mesh& mesh) {
  MeshQuality q;
  q.n_nodes = mesh.nodes.size();
  q.n_tris = mesh.triangles.size();
  q.min_angle_deg = 180.0;
  q.min_angle_unprotected_deg = 180.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    const Vec2& a = mesh.nodes[tri[0]];
    const Vec2& b = mesh.nodes[tri[1]];
    const Vec2& c = mesh.nodes[tri[2]];
    const double ang = planar::triangle_min_angle<double>(a, b, c) / kRad;
    q.min_angle_deg = std::min(q.min_angle_deg, ang);
    const bool prot = t < mesh.protected_triangle.size() && mesh.protected_triangle[t];
    if (prot)
      ++q.n_protected;
    else
      q.min_angle_unprotected_deg = std::min(q.min_angle_unprotected_deg, ang);
    const double la = (b - c).norm(), lb = (c - a).norm(), lc = (a - b).norm();
    const double area = std::abs(planar::triangle_signed_area<double>(a, b, c));
    const double aspect = std::max({la, lb, lc}) * (la + lb + lc) / (4.0 * std::sqrt(3.0) * area);
    q.max_aspect = std::max(q.max_aspect, aspect);
  }
  return q;
}

void write_mesh_text(const Mesh& mesh, std::ostream& out) {
  out.precision(17);
  out << "robinlab-mesh 1 " << mesh.nodes.size() << ' ' << mesh.triangles.size() << ' '
      << mesh.boundary_edges.size() << '\n';
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i)
    out << i << ' ' << mesh.nodes[i].x() << ' ' << mesh.nodes[i].y() << '\n';
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t)
    out << t << ' ' << mesh.triangles[t][0] << ' ' << mesh.triangles[t][1] << ' ' << mesh.triangles[t][2] << '\n';
  for (std::size_t e = 0; e < mesh.boundary_edges.size(); ++e) {
    const auto& be = mesh.boundary_edges[e];
    out << e << ' ' << be.a << ' ' << be.b << ' ' << to_string(be.tag) << ' ' << be.beta << '\n';
  }
}

} // namespace robin
