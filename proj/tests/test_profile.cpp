#include "robinlab/profile.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace robin;

TEST_CASE("monotone envelope is a suffix minimum") {
  std::vector<double> m{0.3, 0.1, 0.2, 0.4, 0.2}, I{5.0, 1.0, 3.0, 2.0, 4.0};
  monotone_envelope(m, I);
  CHECK(m == std::vector<double>{0.1, 0.2, 0.3, 0.4});
  CHECK(I == std::vector<double>{1.0, 2.0, 2.0, 2.0});
}

TEST_CASE("property: envelope is idempotent and nondecreasing") {
  testgen::Gen g(23);
  for (int k = 0; k < 100; ++k) {
    std::vector<double> m, I;
    for (int i = 0, n = g.integer(1, 40); i < n; ++i) {
      m.push_back(g.uniform(1e-3, 1));
      I.push_back(g.uniform(1e-3, 1));
    }
    monotone_envelope(m, I);
    for (std::size_t i = 1; i < m.size(); ++i) {
      CHECK(m[i] > m[i - 1]);
      CHECK(I[i] >= I[i - 1]);
    }
    auto m2 = m, I2 = I;
    monotone_envelope(m2, I2);
    CHECK(m2 == m);
    CHECK(I2 == I);
  }
}

TEST_CASE("exponent fit recovers a pure power law") {
  std::vector<double> m, I;
  for (int k = 0; k <= 40; ++k) {
    m.push_back(std::pow(10.0, -4.0 + 0.1 * k));
    I.push_back(3.0 * std::pow(m.back(), 0.7));
  }
  const auto fit = fit_small_m_exponent(m, I);
  CHECK(fit.exponent == doctest::Approx(0.7).epsilon(1e-10));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK_THROWS_AS(fit_small_m_exponent({1e-3, 1e-2, 1e-1}, {1, 2, 3}), InsufficientResolution);
}

TEST_CASE("certificates respect the margin") {
  auto curve_with = [](double e) {
    std::vector<double> m, I;
    for (int k = 0; k <= 60; ++k) {
      m.push_back(std::pow(10.0, -6.0 + 0.1 * k));
      I.push_back(std::pow(m.back(), e));
    }
    return make_profile_curve(CurveKind::slice, m, I);
  };
  CHECK(curve_with(0.8).certificate == Certificate::certified_summable);
  CHECK(curve_with(1.2).certificate == Certificate::certified_divergent);
  CHECK(curve_with(1.0).certificate == Certificate::inconclusive);
  CHECK(curve_with(1.2).divergent);
}

TEST_CASE("candidate curves never certify divergence") {
  std::vector<double> m, I;
  for (int k = 0; k <= 60; ++k) {
    m.push_back(std::pow(10.0, -6.0 + 0.1 * k));
    I.push_back(std::pow(m.back(), 1.5));
  }
  CHECK(make_profile_curve(CurveKind::candidate, m, I).certificate == Certificate::inconclusive);
}

TEST_CASE("profile integral of a power law") {
  std::vector<double> m, I;
  for (int k = 0; k <= 300; ++k) {
    m.push_back(std::pow(10.0, -6.0 + 0.02 * k));
    I.push_back(std::pow(m.back(), 0.5));
  }
  const auto c = make_profile_curve(CurveKind::slice, m, I);
  // int_0^x m^{-1/2} dm = 2 sqrt(x)
  CHECK(profile_integral(c, 1.0).value == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(profile_integral(c, 0.25).value == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(profile_value(c, 0.01) == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("slice profiles follow the closed-form slope") {
  for (double a : {1.0, 1.5, 3.0}) {
    const auto h = ProfileFunction::power(a);
    const auto c = slice_profile(h, 2, 2.0, slice_t_grid(h, 2, 2.0));
    CHECK(c.exponent == doctest::Approx(a / (0.5 + (a + 1.0) / 2.0)).epsilon(2e-3));
  }
  const auto wedge = ProfileFunction::power(1.0);
  CHECK(slice_profile(wedge, 2, 2.0, slice_t_grid(wedge, 2, 2.0)).certificate == Certificate::certified_summable);
  const auto sharp = ProfileFunction::power(3.0);
  CHECK(slice_profile(sharp, 2, 2.0, slice_t_grid(sharp, 2, 2.0)).certificate == Certificate::certified_divergent);
}

TEST_CASE("candidate samples respect the admissibility constraints") {
  const auto sq = make_rectangle(0, 0, 1, 1);
  const auto s = candidate_samples(sq, 2.0, {CandidateFamily::corner_disks, CandidateFamily::half_planes});
  CHECK_FALSE(s.empty());
  for (const auto& c : s) {
    CHECK(c.measures.volume <= 0.5 + 1e-12);
    CHECK(c.measures.Pi > 0.0);
    CHECK(c.m == doctest::Approx(std::sqrt(c.measures.Pe * c.measures.volume)));
  }
}

TEST_CASE("square candidate profile and local comparison") {
  const auto sq = make_rectangle(0, 0, 1, 1);
  const auto c = candidate_profile(sq, 2.0, {CandidateFamily::corner_disks, CandidateFamily::corner_squares,
                                             CandidateFamily::half_planes, CandidateFamily::boundary_distance});
  CHECK(c.exponent >= 0.60);
  CHECK(c.exponent <= 0.75);
  CHECK(c.certificate == Certificate::certified_summable);
  const auto lc = local_profile_comparison(c, 1.0, 2, 2.0);
  CHECK(lc.equivalent);
  CHECK(isoperimetric_constant(2) == doctest::Approx(2.0 * std::sqrt(kPi)));
  std::ostringstream s;
  write_profile_csv(c, s);
  CHECK(s.str().rfind("m,I,cumulative\n", 0) == 0);
}

TEST_CASE("family names round trip") {
  for (auto f : {CandidateFamily::corner_disks, CandidateFamily::corner_squares, CandidateFamily::boundary_distance,
                 CandidateFamily::half_planes})
    CHECK(candidate_family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(candidate_family_from_string("spheres"), InvalidArgument);
}
