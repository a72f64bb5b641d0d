#include "robinlab/common.hpp"
#include "robinlab/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace robin;

TEST_CASE("smooth integrals reach the requested accuracy") {
  CHECK(quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0).value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(quad::integrate([](double x) { return std::exp(x); }, -1.0, 2.0).value ==
        doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-12));
  CHECK(quad::integrate([](double) { return 1.0; }, 3.0, 3.0).value == 0.0);
}

TEST_CASE("tiny intervals keep a relative error estimate") {
  const auto r = quad::integrate([](double x) { return x; }, 1e-13, 2e-13, {0.0, 1e-10, 18});
  CHECK(r.value == doctest::Approx(1.5e-26).epsilon(1e-12));
}

TEST_CASE("integrable endpoint singularities") {
  CHECK(quad::integrate_from_zero([](double x) { return 1.0 / std::sqrt(x); }, 1.0).value ==
        doctest::Approx(2.0).epsilon(1e-8));
  CHECK(quad::integrate_from_zero([](double x) { return std::pow(x, -0.9); }, 1.0).value ==
        doctest::Approx(10.0).epsilon(1e-6));
}

TEST_CASE("non-integrable singularity is reported") {
  CHECK_THROWS_AS(quad::integrate_from_zero([](double x) { return 1.0 / x; }, 1.0), QuadratureError);
}
