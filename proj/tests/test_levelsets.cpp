#include "robinlab/levelsets.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace robin;

namespace {

/// u = x on the unit square: every sublevel set is a vertical slab.
SolutionField slab_field() {
  auto mesh = std::make_shared<const Mesh>(triangulate(make_rectangle(0, 0, 1, 1, 2.0), 0.1));
  SolutionField f;
  f.mesh = mesh;
  f.u.resize(mesh->n_nodes());
  for (std::size_t i = 0; i < mesh->n_nodes(); ++i) f.u[i] = mesh->nodes[i].x();
  return f;
}

} // namespace

TEST_CASE("slab sublevel geometry is exact") {
  const auto f = slab_field();
  for (double t : {0.13, 0.5, 0.77}) {
    const auto s = sublevel_stats(f, t);
    CHECK(s.volume == doctest::Approx(t).epsilon(1e-12));
    CHECK(s.Pi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.Pe == doctest::Approx(1.0 + 2.0 * t).epsilon(1e-12));
    CHECK(s.Pe_beta == doctest::Approx(2.0 * (1.0 + 2.0 * t)).epsilon(1e-12));
    CHECK(s.g == doctest::Approx(t).epsilon(1e-12));
    CHECK(s.gp == doctest::Approx(t).epsilon(1e-12));
    CHECK_FALSE(s.clamped);
  }
}

TEST_CASE("t on nodal values and outside the range") {
  const auto f = slab_field();
  CHECK(sublevel_stats(f, 0.5).volume == doctest::Approx(0.5).epsilon(1e-12));
  const auto above = sublevel_stats(f, 3.0);
  CHECK(above.clamped);
  CHECK(above.volume == doctest::Approx(1.0));
  CHECK(sublevel_stats(f, -1.0).volume == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("coarea identity on the slab") {
  const auto c = check_coarea(slab_field(), 0.8, 100);
  CHECK(c.g == doctest::Approx(0.8));
  CHECK(c.rel_error < 1e-3);
}

TEST_CASE("Caccioppoli-type checks on a converged solve") {
  const auto mesh = std::make_shared<const Mesh>(triangulate(make_rectangle(0, 0, 1, 1), 0.05));
  const auto field = minimize(mesh, RunParams{});
  const auto grid = interior_grid(field.u.minCoeff(), field.u.maxCoeff(), 20);
  CHECK(grid.size() == 20);
  for (double t : grid) {
    CHECK(check_caccioppoli(field, t).ok);
    CHECK(check_g_bound(field, t).ok);
  }
}

TEST_CASE("property: sublevel measures are monotone in t") {
  const auto mesh = std::make_shared<const Mesh>(triangulate(make_rectangle(0, 0, 1, 1), 0.1));
  const auto field = minimize(mesh, RunParams{});
  testgen::Gen g(13);
  for (int k = 0; k < 50; ++k) {
    const double a = g.uniform(0.2, 0.34), b = g.uniform(0.2, 0.34);
    const auto s = sublevel_stats(field, std::min(a, b)), l = sublevel_stats(field, std::max(a, b));
    CHECK(s.volume <= l.volume + 1e-15);
    CHECK(s.g <= l.g + 1e-15);
    CHECK(s.gp <= l.gp + 1e-15);
  }
}

TEST_CASE("grids") {
  const auto c = cosine_grid(0.0, 1.0, 5);
  CHECK(c.front() == 0.0);
  CHECK(c.back() == doctest::Approx(1.0));
  CHECK(c[2] == doctest::Approx(0.5));
  const auto i = interior_grid(0.0, 1.0, 4);
  CHECK(i.front() > 0.0);
  CHECK(i.back() < 1.0);
}
