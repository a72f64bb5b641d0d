#include "robinlab/solver.hpp"

#include "support.hpp"

#include <doctest.h>

#include <Eigen/SparseCholesky>

#include <sstream>

using namespace robin;

namespace {

std::shared_ptr<const Mesh> square_mesh(double h, double beta = 1.0) {
  return std::make_shared<const Mesh>(triangulate(make_rectangle(0, 0, 1, 1, beta), h));
}

} // namespace

TEST_CASE("p = 2 minimizer solves the linear system") {
  const auto mesh = square_mesh(0.1);
  RunParams rp;
  const auto field = minimize(mesh, rp);
  const auto [A, b] = linear_system(*mesh, rp);
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
  const Eigen::VectorXd u = ldlt.solve(b);
  CHECK((u - field.u).lpNorm<Eigen::Infinity>() < 1e-10);
  CHECK(field.diagnostics.converged);
}

TEST_CASE("thin strip matches the one-dimensional oracle") {
  // Long sides insulated: u = (1 - x^2)/2 ... shifted; the minimum 1/(2 beta) sits at the Robin ends.
  PolygonDomain d = make_rectangle(0, 0, 1, 0.02, 1.0);
  d.edges[0].beta = d.edges[2].beta = 0.0;
  const auto field = minimize(triangulate(d, 0.01), RunParams{});
  CHECK(min_value(field) == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(field.u.maxCoeff() == doctest::Approx(0.625).epsilon(1e-3));
}

TEST_CASE("dirichlet constraints are imposed exactly") {
  PolygonDomain d = make_rectangle(0, 0, 1, 1);
  d.edges[1].tag = EdgeTag::dirichlet;
  const auto mesh = std::make_shared<const Mesh>(triangulate(d, 0.1));
  const auto field = minimize(mesh, RunParams{}, {{EdgeTag::dirichlet, 2.0}});
  for (int n : nodes_with_tag(*mesh, EdgeTag::dirichlet)) CHECK(field.u[n] == 2.0);
}

TEST_CASE("nonlinear exponents converge with a vanishing weak residual") {
  const auto mesh = square_mesh(0.1);
  for (double p : {1.5, 3.0}) {
    RunParams rp;
    rp.p = p;
    const auto field = minimize(mesh, rp);
    CHECK(field.diagnostics.converged);
    testgen::Gen g(3);
    Eigen::VectorXd w(mesh->n_nodes());
    for (int i = 0; i < w.size(); ++i) w[i] = g.uniform(-1, 1);
    CHECK(std::abs(weak_residual(field, w)) < 1e-6);
    CHECK(field.u.minCoeff() > 0.0);
  }
}

TEST_CASE("property: energy gradient matches finite differences") {
  const auto mesh = square_mesh(0.25);
  testgen::Gen g(5);
  for (double p : {1.5, 2.0, 3.0}) {
    RunParams rp;
    rp.p = p;
    rp.epsilon = 1e-2;
    Eigen::VectorXd v(mesh->n_nodes());
    for (int i = 0; i < v.size(); ++i) v[i] = g.uniform(0.1, 1.0);
    const Eigen::VectorXd grad = energy_gradient(*mesh, rp, v);
    for (int k = 0; k < 5; ++k) {
      const int i = g.integer(0, static_cast<int>(v.size()) - 1);
      const double s = 1e-6;
      Eigen::VectorXd vp = v, vm = v;
      vp[i] += s;
      vm[i] -= s;
      const double fd = (energy(*mesh, rp, vp) - energy(*mesh, rp, vm)) / (2 * s);
      CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("property: minimizer has lower energy than perturbations") {
  const auto mesh = square_mesh(0.2);
  testgen::Gen g(9);
  for (double p : {1.5, 2.0, 4.0}) {
    RunParams rp;
    rp.p = p;
    const auto field = minimize(mesh, rp);
    const double e0 = energy(*mesh, rp, field.u);
    for (int k = 0; k < 10; ++k) {
      Eigen::VectorXd v = field.u;
      for (int i = 0; i < v.size(); ++i) v[i] += 1e-3 * g.uniform(-1, 1);
      CHECK(energy(*mesh, rp, v) >= e0 - 1e-14 * std::abs(e0));
    }
  }
}

TEST_CASE("property: scaling the source") {
  const auto mesh = square_mesh(0.1);
  for (double p : {2.0, 3.0})
    for (double lambda : {0.5, 2.0}) {
      RunParams rp, rs;
      rp.p = rs.p = p;
      rs.f_constant = lambda;
      const auto u = minimize(mesh, rp).u, v = minimize(mesh, rs).u;
      const double factor = std::pow(lambda, 1.0 / (p - 1.0));
      CHECK((v - factor * u).lpNorm<Eigen::Infinity>() < 1e-7 * factor * u.lpNorm<Eigen::Infinity>());
    }
}

TEST_CASE("invalid parameters") {
  const auto mesh = square_mesh(0.5);
  RunParams rp;
  rp.p = 1.0;
  CHECK_THROWS_AS(minimize(mesh, rp), InvalidArgument);
  rp.p = 2.0;
  rp.beta = -1.0;
  CHECK_THROWS_AS(minimize(mesh, rp), InvalidArgument);
}

TEST_CASE("solution csv") {
  const auto field = minimize(square_mesh(0.5), RunParams{});
  std::ostringstream s;
  write_solution_csv(field, s);
  CHECK(s.str().rfind("node_id,x,y,u\n", 0) == 0);
}
