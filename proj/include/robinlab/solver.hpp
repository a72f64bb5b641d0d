#pragma once

#include "robinlab/mesh.hpp"

#include <Eigen/Sparse>

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace robin {

struct SolverOptions {
  double rel_energy_tol = 1e-12;
  double residual_tol = 1e-9; ///< relative to the problem scale
  double eps_start = 1e-2;    ///< relative regularization at the first continuation level
  double eps_end = 1e-8;
  int eps_levels = 7;
  int max_newton_per_level = 60;
};

/// Parameters of one energy minimization. Robin and truncation edges carry
/// the per-edge beta of the mesh unless `beta` overrides it.
struct RunParams {
  double p = 2.0;
  std::optional<double> beta;
  /// Per-triangle source values; when empty, `f_constant` is used everywhere.
  std::vector<double> f;
  double f_constant = 1.0;
  /// Regularization used by energy() and weak_residual(); 0 is the exact energy.
  double epsilon = 0.0;
  SolverOptions solver;

  double p_conjugate() const { return p / (p - 1.0); }
  double f_on(std::size_t triangle) const { return f.empty() ? f_constant : f[triangle]; }
  void validate(const Mesh& mesh) const;
};

/// Per-triangle source sampled at the centroids of a closed-form density.
std::vector<double> source_at_centroids(const Mesh& mesh, const std::function<double(const Vec2&)>& f);

/// Dirichlet values imposed on every node of every edge with the given tag.
using Constraints = std::map<EdgeTag, double>;

struct SolverDiagnostics {
  int iterations = 0;
  double gradient_norm = 0.0;  ///< max-norm of the free-node energy gradient
  double residual_scale = 1.0; ///< the scale the stopping test is relative to
  double final_epsilon = 0.0;
  bool converged = false;
  std::vector<double> energy_trace; ///< regularized energy after every Newton step
};

struct SolutionField {
  std::shared_ptr<const Mesh> mesh;
  Eigen::VectorXd u;
  RunParams params;
  Constraints constraints;
  double energy = 0.0;
  SolverDiagnostics diagnostics;

  /// Field with identical mesh and parameters and nodal values `values`.
  SolutionField with_values(Eigen::VectorXd values) const;
};

/// Effective beta of a boundary edge under `params` (0 on dirichlet edges).
double edge_beta(const MeshBoundaryEdge& edge, const RunParams& params);

double energy(const Mesh& mesh, const RunParams& params, const Eigen::VectorXd& v);

/// Energy gradient with respect to the nodal values (regularization from params).
Eigen::VectorXd energy_gradient(const Mesh& mesh, const RunParams& params, const Eigen::VectorXd& v);

/// Minimizes the energy by damped Newton with continuation in the
/// regularization. Non-convergence is reported through diagnostics.converged;
/// an indefinite Newton matrix throws IndefiniteHessian.
SolutionField minimize(std::shared_ptr<const Mesh> mesh, const RunParams& params,
                       const Constraints& constraints = {},
                       const std::optional<Eigen::VectorXd>& initial = std::nullopt);

SolutionField minimize(const Mesh& mesh, const RunParams& params, const Constraints& constraints = {},
                       const std::optional<Eigen::VectorXd>& initial = std::nullopt);

/// Discrete weak form lhs - rhs tested against the nodal values `w`.
double weak_residual(const SolutionField& field, const Eigen::VectorXd& w);

/// For p = 2: stiffness plus exact boundary mass matrix and the load vector.
std::pair<Eigen::SparseMatrix<double>, Eigen::VectorXd> linear_system(const Mesh& mesh, const RunParams& params);

/// Minimum nodal value over the nodes satisfying `region` (all nodes by default).
double min_value(const SolutionField& field, const std::function<bool(const Vec2&)>& region = {});

/// Node indices lying on edges with the given tags.
std::vector<int> nodes_with_tag(const Mesh& mesh, EdgeTag tag);

void write_solution_csv(const SolutionField& field, std::ostream& out);

} // namespace robin
