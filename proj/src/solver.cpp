#include "robinlab/solver.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>

namespace robin {

void RunParams::validate(const Mesh& mesh) const {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("RunParams: p must be finite and > 1");
  if (beta && (!std::isfinite(*beta) || *beta < 0.0)) throw InvalidArgument("RunParams: beta must be finite and >= 0");
  if (!f.empty() && f.size() != mesh.n_triangles())
    throw InvalidArgument("RunParams: per-triangle source has the wrong length");
  for (double v : f)
    if (!std::isfinite(v)) throw InvalidArgument("RunParams: source values must be finite");
  if (!std::isfinite(f_constant)) throw InvalidArgument("RunParams: source value must be finite");
  if (epsilon < 0.0) throw InvalidArgument("RunParams: epsilon must be >= 0");
}

std::vector<double> source_at_centroids(const Mesh& mesh, const std::function<double(const Vec2&)>& f) {
  std::vector<double> out(mesh.n_triangles());
  for (std::size_t t = 0; t < out.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    out[t] = f((mesh.nodes[tri[0]] + mesh.nodes[tri[1]] + mesh.nodes[tri[2]]) / 3.0);
  }
  return out;
}

double edge_beta(const MeshBoundaryEdge& edge, const RunParams& params) {
  if (!is_exterior(edge.tag)) return 0.0;
  return params.beta ? *params.beta : edge.beta;
}

SolutionField SolutionField::with_values(Eigen::VectorXd values) const {
  SolutionField out = *this;
  out.u = std::move(values);
  out.energy = robin::energy(*mesh, params, out.u);
  return out;
}

namespace {

// Four-point Gauss-Lobatto rule on [0, 1].
constexpr std::array<double, 4> kLobattoS{0.0, 0.27639320225002103, 0.72360679774997897, 1.0};
constexpr std::array<double, 4> kLobattoW{1.0 / 12, 5.0 / 12, 5.0 / 12, 1.0 / 12};

struct Element {
  std::array<int, 3> v;
  double area;
  Eigen::Matrix<double, 2, 3> grad; // columns: gradients of the hat functions
  double f;
};

struct Edge {
  int a, b;
  double beta_length;
};

/// Regularized power: phi(s) = ((s + eps^2)^{p/2} - eps^p) / p with s = |z|^2,
/// together with the coefficients of its gradient and Hessian in z.
struct Power {
  double p, eps;
  double value(double s) const { return (std::pow(s + eps * eps, 0.5 * p) - std::pow(eps, p)) / p; }
  double a(double s) const {
    const double r = s + eps * eps;
    // Only ever multiplies z, so 0 is the right limit at r = 0 for every p > 1.
    return r > 0.0 ? std::pow(r, 0.5 * p - 1.0) : (p == 2.0 ? 1.0 : 0.0);
  }
  double b(double s) const { return p == 2.0 ? 0.0 : (p - 2.0) * std::pow(s + eps * eps, 0.5 * p - 2.0); }
};

class Problem {
public:
  Problem(const Mesh& mesh, const RunParams& params) : p_(params.p) {
    elements_.reserve(mesh.n_triangles());
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
      const auto& tri = mesh.triangles[t];
      Element e;
      e.v = tri;
      const Vec2& x0 = mesh.nodes[tri[0]];
      const Vec2& x1 = mesh.nodes[tri[1]];
      const Vec2& x2 = mesh.nodes[tri[2]];
      e.area = mesh.triangle_area(t);
      if (!(e.area > 0.0)) throw InvalidArgument("solver: mesh has a non-positive triangle");
      const double inv = 1.0 / (2.0 * e.area);
      const std::array<Vec2, 3> opp{x2 - x1, x0 - x2, x1 - x0};
      for (int k = 0; k < 3; ++k) e.grad.col(k) = Vec2(-opp[k].y(), opp[k].x()) * inv;
      e.f = params.f_on(t);
      elements_.push_back(e);
    }
    for (const auto& be : mesh.boundary_edges) {
      const double beta = edge_beta(be, params);
      if (beta > 0.0) edges_.push_back({be.a, be.b, beta * be.length});
    }
  }

  double energy(const Eigen::VectorXd& v, double eps_grad, double eps_trace) const {
    const Power pg{p_, eps_grad}, pt{p_, eps_trace};
    double bulk = 0.0, trace = 0.0, load = 0.0;
    for (const auto& e : elements_) {
      const Vec2 z = e.grad * Eigen::Vector3d(v[e.v[0]], v[e.v[1]], v[e.v[2]]);
      bulk += e.area * pg.value(z.squaredNorm());
      load += e.f * e.area * (v[e.v[0]] + v[e.v[1]] + v[e.v[2]]) / 3.0;
    }
    for (const auto& ed : edges_) {
      double s = 0.0;
      for (int q = 0; q < 4; ++q) {
        const double w = (1.0 - kLobattoS[q]) * v[ed.a] + kLobattoS[q] * v[ed.b];
        s += kLobattoW[q] * pt.value(w * w);
      }
      trace += ed.beta_length * s;
    }
    return bulk + trace - load;
  }

  Eigen::VectorXd gradient(const Eigen::VectorXd& v, double eps_grad, double eps_trace) const {
    const Power pg{p_, eps_grad}, pt{p_, eps_trace};
    Eigen::VectorXd g = Eigen::VectorXd::Zero(v.size());
    for (const auto& e : elements_) {
      const Vec2 z = e.grad * Eigen::Vector3d(v[e.v[0]], v[e.v[1]], v[e.v[2]]);
      const Eigen::Vector3d ge = e.area * pg.a(z.squaredNorm()) * (e.grad.transpose() * z);
      for (int k = 0; k < 3; ++k) g[e.v[k]] += ge[k] - e.f * e.area / 3.0;
    }
    for (const auto& ed : edges_) {
      for (int q = 0; q < 4; ++q) {
        const double s = kLobattoS[q];
        const double w = (1.0 - s) * v[ed.a] + s * v[ed.b];
        const double d = ed.beta_length * kLobattoW[q] * pt.a(w * w) * w;
        g[ed.a] += (1.0 - s) * d;
        g[ed.b] += s * d;
      }
    }
    return g;
  }

  /// Hessian restricted to the free nodes (map node -> dof, -1 when fixed).
  Eigen::SparseMatrix<double> hessian(const Eigen::VectorXd& v, double eps_grad, double eps_trace,
                                      const std::vector<int>& dof, int n_dof) const {
    const Power pg{p_, eps_grad}, pt{p_, eps_trace};
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(9 * elements_.size() + 4 * edges_.size());
    for (const auto& e : elements_) {
      const Vec2 z = e.grad * Eigen::Vector3d(v[e.v[0]], v[e.v[1]], v[e.v[2]]);
      const double s = z.squaredNorm();
      const Eigen::Vector3d gz = e.grad.transpose() * z;
      const Eigen::Matrix3d he = e.area * (pg.a(s) * (e.grad.transpose() * e.grad) + pg.b(s) * gz * gz.transpose());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const int di = dof[e.v[i]], dj = dof[e.v[j]];
          if (di >= 0 && dj >= 0) trip.emplace_back(di, dj, he(i, j));
        }
    }
    for (const auto& ed : edges_) {
      Eigen::Matrix2d he = Eigen::Matrix2d::Zero();
      for (int q = 0; q < 4; ++q) {
        const double s = kLobattoS[q];
        const double w = (1.0 - s) * v[ed.a] + s * v[ed.b];
        const double w2 = w * w;
        const double c = ed.beta_length * kLobattoW[q] * (pt.a(w2) + pt.b(w2) * w2);
        const Eigen::Vector2d phi(1.0 - s, s);
        he += c * phi * phi.transpose();
      }
      const std::array<int, 2> nodes{ed.a, ed.b};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const int di = dof[nodes[i]], dj = dof[nodes[j]];
          if (di >= 0 && dj >= 0) trip.emplace_back(di, dj, he(i, j));
        }
    }
    Eigen::SparseMatrix<double> h(n_dof, n_dof);
    h.setFromTriplets(trip.begin(), trip.end());
    return h;
  }

  /// Exact (unregularized) weak form lhs - rhs against w.
  double weak_residual(const Eigen::VectorXd& u, const Eigen::VectorXd& w) const {
    // |z|^{p-2} z vanishes with z for every p > 1.
    auto flux = [this](double s) { return s > 0.0 ? std::pow(s, 0.5 * p_ - 1.0) : 0.0; };
    double r = 0.0;
    for (const auto& e : elements_) {
      const Vec2 z = e.grad * Eigen::Vector3d(u[e.v[0]], u[e.v[1]], u[e.v[2]]);
      const Vec2 zw = e.grad * Eigen::Vector3d(w[e.v[0]], w[e.v[1]], w[e.v[2]]);
      r += e.area * flux(z.squaredNorm()) * z.dot(zw);
      r -= e.f * e.area * (w[e.v[0]] + w[e.v[1]] + w[e.v[2]]) / 3.0;
    }
    for (const auto& ed : edges_)
      for (int q = 0; q < 4; ++q) {
        const double s = kLobattoS[q];
        const double uu = (1.0 - s) * u[ed.a] + s * u[ed.b];
        const double ww = (1.0 - s) * w[ed.a] + s * w[ed.b];
        r += ed.beta_length * kLobattoW[q] * flux(uu * uu) * uu * ww;
      }
    return r;
  }

  double gradient_scale(const Eigen::VectorXd& v) const {
    double m = 0.0;
    for (const auto& e : elements_)
      m = std::max(m, (e.grad * Eigen::Vector3d(v[e.v[0]], v[e.v[1]], v[e.v[2]])).norm());
    return m;
  }

  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Edge>& edges() const { return edges_; }

private:
  double p_;
  std::vector<Element> elements_;
  std::vector<Edge> edges_;
};

double max_abs_free(const Eigen::VectorXd& g, const std::vector<int>& dof) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i)
    if (dof[i] >= 0) m = std::max(m, std::abs(g[i]));
  return m;
}

} // namespace

double energy(const Mesh& mesh, const RunParams& params, const Eigen::VectorXd& v) {
  params.validate(mesh);
  if (v.size() != static_cast<Eigen::Index>(mesh.n_nodes())) throw InvalidArgument("energy: wrong number of nodal values");
  return Problem(mesh, params).energy(v, params.epsilon, params.epsilon);
}

Eigen::VectorXd energy_gradient(const Mesh& mesh, const RunParams& params, const Eigen::VectorXd& v) {
  params.validate(mesh);
  if (v.size() != static_cast<Eigen::Index>(mesh.n_nodes()))
    throw InvalidArgument("energy_gradient: wrong number of nodal values");
  return Problem(mesh, params).gradient(v, params.epsilon, params.epsilon);
}

std::vector<int> nodes_with_tag(const Mesh& mesh, EdgeTag tag) {
  std::set<int> nodes;
  for (const auto& e : mesh.boundary_edges)
    if (e.tag == tag) {
      nodes.insert(e.a);
      nodes.insert(e.b);
    }
  return {nodes.begin(), nodes.end()};
}

SolutionField minimize(const Mesh& mesh, const RunParams& params, const Constraints& constraints,
                       const std::optional<Eigen::VectorXd>& initial) {
  return minimize(std::make_shared<const Mesh>(mesh), params, constraints, initial);
}

SolutionField minimize(std::shared_ptr<const Mesh> mesh_ptr, const RunParams& params, const Constraints& constraints,
                       const std::optional<Eigen::VectorXd>& initial) {
  if (!mesh_ptr) throw InvalidArgument("minimize: null mesh");
  const Mesh& mesh = *mesh_ptr;
  params.validate(mesh);
  const auto n = static_cast<Eigen::Index>(mesh.n_nodes());
  if (initial && initial->size() != n) throw InvalidArgument("minimize: initial guess has the wrong length");

  Eigen::VectorXd u = initial ? *initial : Eigen::VectorXd::Zero(n);
  std::vector<int> dof(n, 0);
  for (const auto& [tag, value] : constraints) {
    if (!std::isfinite(value)) throw InvalidArgument("minimize: constraint value must be finite");
    for (int node : nodes_with_tag(mesh, tag)) {
      if (dof[node] < 0 && u[node] != value) throw InvalidArgument("minimize: inconsistent constraints at a shared node");
      dof[node] = -1;
      u[node] = value;
    }
  }
  int n_dof = 0;
  for (auto& d : dof)
    if (d >= 0) d = n_dof++;

  const Problem prob(mesh, params);
  SolutionField field;
  field.mesh = mesh_ptr;
  field.params = params;
  field.constraints = constraints;
  auto& diag = field.diagnostics;

  Eigen::VectorXd u0 = u;
  for (Eigen::Index i = 0; i < n; ++i)
    if (dof[i] >= 0) u0[i] = 0.0;
  const double scale = max_abs_free(prob.gradient(u0, 0.0, 0.0), dof);
  diag.residual_scale = scale > 0.0 ? scale : 1.0;
  if (n_dof == 0 || scale == 0.0) {
    // Fully constrained, or the constrained zero extension is already optimal.
    u = u0;
    field.u = u;
    field.energy = prob.energy(u, 0.0, 0.0);
    diag.converged = true;
    return field;
  }

  // Continuation levels; p = 2 is exactly quadratic and needs none.
  std::vector<double> levels;
  const bool quadratic = params.p == 2.0;
  if (quadratic) {
    levels.push_back(0.0);
  } else {
    const int k = std::max(2, params.solver.eps_levels);
    for (int i = 0; i < k; ++i)
      levels.push_back(params.solver.eps_start *
                       std::pow(params.solver.eps_end / params.solver.eps_start, double(i) / (k - 1)));
  }

  // A start at zero has no gradient scale for the regularization; use one
  // linear solve as the initial guess.
  if (!initial && !quadratic) {
    RunParams lin = params;
    lin.p = 2.0;
    lin.solver.eps_levels = 1;
    u = minimize(mesh_ptr, lin, constraints).u;
  }

  double eps_g = 0.0, eps_t = 0.0;
  for (std::size_t level = 0; level < levels.size(); ++level) {
    const bool last = level + 1 == levels.size();
    if (!quadratic) {
      const double gs = std::max(prob.gradient_scale(u), std::numeric_limits<double>::min());
      const double vs = std::max(u.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
      eps_g = std::max(levels[level] * gs, params.epsilon);
      eps_t = std::max(levels[level] * vs, params.epsilon);
    }
    const double tol = last ? params.solver.residual_tol * diag.residual_scale : 1e-6 * diag.residual_scale;
    double e_cur = prob.energy(u, eps_g, eps_t);
    for (int it = 0; it < params.solver.max_newton_per_level; ++it) {
      const Eigen::VectorXd g_full = prob.gradient(u, eps_g, eps_t);
      Eigen::VectorXd g(n_dof);
      for (Eigen::Index i = 0; i < n; ++i)
        if (dof[i] >= 0) g[dof[i]] = g_full[i];
      const double gnorm = g.cwiseAbs().maxCoeff();
      diag.gradient_norm = gnorm;

      const Eigen::SparseMatrix<double> h = prob.hessian(u, eps_g, eps_t, dof, n_dof);
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(h);
      if (ldlt.info() != Eigen::Success || !(ldlt.vectorD().minCoeff() > 0.0))
        throw IndefiniteHessian("minimize: Newton matrix is not positive definite; increase the regularization");
      const Eigen::VectorXd d = ldlt.solve(-g);
      const double slope = g.dot(d);
      const double decrement = -0.5 * slope;
      if (gnorm <= tol && (!last || decrement <= params.solver.rel_energy_tol * std::max(std::abs(e_cur), 1e-300))) {
        if (last) diag.converged = true;
        break;
      }
      if (!(slope < 0.0)) break;

      // Below the round-off level of the energy the Armijo test is noise;
      // there the step must reduce the gradient norm instead.
      const bool roundoff = decrement <= 64 * std::numeric_limits<double>::epsilon() * std::max(std::abs(e_cur), 1e-300);
      double step = 1.0;
      Eigen::VectorXd trial = u;
      double e_new = e_cur;
      bool accepted = false;
      while (step > 1e-12) {
        trial = u;
        for (Eigen::Index i = 0; i < n; ++i)
          if (dof[i] >= 0) trial[i] += step * d[dof[i]];
        e_new = prob.energy(trial, eps_g, eps_t);
        accepted = roundoff ? max_abs_free(prob.gradient(trial, eps_g, eps_t), dof) < gnorm
                            : e_new <= e_cur + 1e-4 * step * slope;
        if (accepted) break;
        step *= 0.5;
      }
      ++diag.iterations;
      if (!accepted) break;
      u = trial;
      e_cur = e_new;
      diag.energy_trace.push_back(e_cur);
    }
  }
  if (!diag.converged) {
    // Re-check the last state; the loop may have stopped on the iteration cap.
    const double gnorm = max_abs_free(prob.gradient(u, eps_g, eps_t), dof);
    diag.gradient_norm = gnorm;
    diag.converged = gnorm <= params.solver.residual_tol * diag.residual_scale;
  }
  diag.final_epsilon = eps_g;
  field.u = u;
  field.energy = prob.energy(u, params.epsilon, params.epsilon);
  return field;
}

double weak_residual(const SolutionField& field, const Eigen::VectorXd& w) {
  if (w.size() != field.u.size()) throw InvalidArgument("weak_residual: wrong number of test values");
  return Problem(*field.mesh, field.params).weak_residual(field.u, w);
}

std::pair<Eigen::SparseMatrix<double>, Eigen::VectorXd> linear_system(const Mesh& mesh, const RunParams& params) {
  params.validate(mesh);
  const auto n = static_cast<Eigen::Index>(mesh.n_nodes());
  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    const double area = mesh.triangle_area(t);
    // Classical cotangent-free form: K_ij = (e_i . e_j) / (4 area), e_k the edge opposite node k.
    std::array<Vec2, 3> e;
    for (int k = 0; k < 3; ++k) e[k] = mesh.nodes[tri[(k + 2) % 3]] - mesh.nodes[tri[(k + 1) % 3]];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) trip.emplace_back(tri[i], tri[j], e[i].dot(e[j]) / (4.0 * area));
      rhs[tri[i]] += params.f_on(t) * area / 3.0;
    }
  }
  for (const auto& be : mesh.boundary_edges) {
    const double c = edge_beta(be, params) * be.length / 6.0;
    if (c == 0.0) continue;
    trip.emplace_back(be.a, be.a, 2 * c);
    trip.emplace_back(be.b, be.b, 2 * c);
    trip.emplace_back(be.a, be.b, c);
    trip.emplace_back(be.b, be.a, c);
  }
  Eigen::SparseMatrix<double> k(n, n);
  k.setFromTriplets(trip.begin(), trip.end());
  return {k, rhs};
}

double min_value(const SolutionField& field, const std::function<bool(const Vec2&)>& region) {
  double m = std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < field.mesh->n_nodes(); ++i) {
    if (region && !region(field.mesh->nodes[i])) continue;
    any = true;
    m = std::min(m, field.u[static_cast<Eigen::Index>(i)]);
  }
  if (!any) throw InvalidArgument("min_value: region contains no nodes");
  return m;
}

void write_solution_csv(const SolutionField& field, std::ostream& out) {
  out.precision(17);
  out << "node_id,x,y,u\n";
  for (std::size_t i = 0; i < field.mesh->n_nodes(); ++i) {
    const Vec2& x = field.mesh->nodes[i];
    out << i << ',' << x.x() << ',' << x.y() << ',' << field.u[static_cast<Eigen::Index>(i)] << '\n';
  }
}

} // namespace robin
