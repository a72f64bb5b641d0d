#include "robinlab/regions.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace robin;

TEST_CASE("corner disk of the unit square") {
  const auto m = intersect(make_rectangle(0, 0, 1, 1), Disk{{0, 0}, 0.5});
  CHECK(m.volume == doctest::Approx(kPi / 16.0).epsilon(1e-12));
  CHECK(m.Pe == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.Pi == doctest::Approx(kPi / 4.0).epsilon(1e-12));
}

TEST_CASE("corner square and half planes") {
  const auto sq = make_rectangle(0, 0, 1, 1, 3.0);
  const auto c = intersect(sq, AxisSquare{{0, 0}, 0.3});
  CHECK(c.volume == doctest::Approx(0.09));
  CHECK(c.Pe == doctest::Approx(0.6));
  CHECK(c.Pe_beta == doctest::Approx(1.8));
  CHECK(c.Pi == doctest::Approx(0.6));
  const auto h = intersect(sq, HalfPlane{{1, 0}, 0.25});
  CHECK(h.volume == doctest::Approx(0.25));
  CHECK(h.Pe == doctest::Approx(1.5));
  CHECK(h.Pi == doctest::Approx(1.0));
  const auto diag = intersect(sq, HalfPlane{{1, 1}, 0.5});
  CHECK(diag.volume == doctest::Approx(0.125));
  CHECK(diag.Pi == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("interior and empty regions") {
  const auto sq = make_rectangle(0, 0, 1, 1);
  const auto in = intersect(sq, Disk{{0.5, 0.5}, 0.2});
  CHECK(in.volume == doctest::Approx(kPi * 0.04));
  CHECK(in.Pe == 0.0);
  CHECK(in.Pi == doctest::Approx(2 * kPi * 0.2));
  const auto out = intersect(sq, Disk{{3, 3}, 0.2});
  CHECK(out.volume == 0.0);
}

TEST_CASE("dirichlet pieces count as interior perimeter") {
  auto sq = make_rectangle(0, 0, 1, 1);
  sq.edges[3].tag = EdgeTag::dirichlet; // left side
  const auto h = intersect(sq, HalfPlane{{1, 0}, 0.25});
  CHECK(h.Pe == doctest::Approx(0.5));
  CHECK(h.Pi == doctest::Approx(2.0));
}

TEST_CASE("boundary layer of a convex domain") {
  const auto l = boundary_layer(make_rectangle(0, 0, 1, 1), 0.1);
  CHECK(l.volume == doctest::Approx(0.36));
  CHECK(l.Pe == doctest::Approx(4.0));
  CHECK(l.Pi == doctest::Approx(3.2));
  CHECK_THROWS_AS(boundary_layer(make_polygon({{0, 0}, {2, 0}, {1, 0.2}, {1, 1}}), 0.1), InvalidArgument);
}

TEST_CASE("property: complementary half planes partition the domain") {
  testgen::Gen g(17);
  for (int k = 0; k < 100; ++k) {
    const auto d = g.convex_polygon(g.integer(3, 10));
    const double th = g.uniform(0, 2 * kPi), c = g.uniform(-0.5, 0.5);
    const Vec2 n(std::cos(th), std::sin(th));
    const auto a = intersect(d, HalfPlane{n, c}), b = intersect(d, HalfPlane{-n, -c});
    CHECK(a.volume + b.volume == doctest::Approx(d.area()).epsilon(1e-12));
    CHECK(a.Pe + b.Pe == doctest::Approx(d.exterior_length()).epsilon(1e-12));
    CHECK(a.Pi == doctest::Approx(b.Pi).epsilon(1e-9));
  }
}

TEST_CASE("property: disk measures are monotone in the radius") {
  testgen::Gen g(19);
  for (int k = 0; k < 50; ++k) {
    const auto d = g.convex_polygon(g.integer(3, 10));
    const Vec2 c(g.uniform(-1, 1), g.uniform(-1, 1));
    const double r1 = g.uniform(0.01, 1.0), r2 = r1 + g.uniform(0.0, 0.5);
    const auto a = intersect(d, Disk{c, r1}), b = intersect(d, Disk{c, r2});
    CHECK(a.volume <= b.volume + 1e-14);
    CHECK(a.Pe <= b.Pe + 1e-14);
    CHECK(a.volume <= kPi * r1 * r1 + 1e-14);
  }
}
