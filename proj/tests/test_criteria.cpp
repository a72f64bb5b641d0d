#include "robinlab/criteria.hpp"

#include "support.hpp"

#include <iomanip>
#include <doctest.h>

#include <boost/rational.hpp>

#include <sstream>

using namespace robin;
using Q = boost::rational<long long>;

TEST_CASE("exponent M in exact arithmetic") {
  const auto crit = exponent_M(Q(2), 2, Q(1, 3), Q(1, 2));
  CHECK(crit.value == Q(1));
  CHECK(crit.verdict == Verdict::critical);
  const auto lip = exponent_M(Q(2), 2, Q(0), Q(0));
  CHECK(lip.value == Q(3, 2));
  CHECK(lip.verdict == Verdict::positive);
  const auto full = exponent_M(Q(2), 2, Q(1), Q(1));
  CHECK(full.value == Q(1, 2));
  CHECK(full.verdict == Verdict::negative);
  CHECK(exponent_M(2.0, 2, 1.0 / 3.0, 0.5).verdict == Verdict::critical);
}

TEST_CASE("exponent M preconditions") {
  CHECK_THROWS_AS(exponent_M(1.0, 2, 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(exponent_M(2.0, 1, 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(exponent_M(2.0, 2, 1.5, 0.0), InvalidArgument);
}

TEST_CASE("property: M decreases in a") {
  for (Q b : {Q(0), Q(1, 2)}) {
    Q prev = exponent_M(Q(2), 2, Q(0), b).value;
    for (int k = 1; k <= 20; ++k) {
      const Q cur = exponent_M(Q(2), 2, Q(k, 20), b).value;
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("cusp criterion threshold sits at alpha = p") {
  for (double p : {1.5, 2.0, 3.0}) {
    CHECK(cusp_criterion(ProfileFunction::power(p), 2, p).verdict == Verdict::critical);
    CHECK(cusp_criterion(ProfileFunction::power(p * 0.9 < 1.0 ? 1.0 : p * 0.9), 2, p).verdict == Verdict::positive);
    CHECK(cusp_criterion(ProfileFunction::power(p * 1.1), 2, p).verdict == Verdict::negative);
  }
}

TEST_CASE("closed-form values") {
  // (alpha+1)^{1/p} t^{1 - alpha/p} / (1 - alpha/p) and its N = 3 analogue.
  CHECK(cusp_criterion(ProfileFunction::power(1.5), 2, 2.0).value == doctest::Approx(std::sqrt(2.5) * 4.0));
  CHECK(cusp_criterion(ProfileFunction::power(1.5), 3, 2.0).value ==
        doctest::Approx(5.05964425626940693).epsilon(1e-12));
  CHECK(bbc_criterion(ProfileFunction::power(1.5), 2).value == doctest::Approx(2.0));
  CHECK(bbc_criterion(ProfileFunction::power(1.0), 2).value == doctest::Approx(1.0));
}

TEST_CASE("power-log contrast between the two criteria") {
  const auto g15 = ProfileFunction::power_log(2.0, 1.5), g3 = ProfileFunction::power_log(2.0, 3.0);
  CHECK(cusp_criterion(g15, 2, 2.0).verdict == Verdict::negative);
  CHECK(cusp_criterion(g3, 2, 2.0).verdict == Verdict::positive);
  CHECK(bbc_criterion(g15, 2).verdict == Verdict::positive);
  CHECK(bbc_criterion(g3, 2).verdict == Verdict::positive);
  // Closed forms 2 L^{-1/2} and L^{-2}/2 with L = log(1/t_max).
  CHECK(bbc_criterion(g15, 2).value == doctest::Approx(1.66484836156486513).epsilon(5e-4));
  CHECK(bbc_criterion(g3, 2).value == doctest::Approx(0.103952382785204860).epsilon(1e-4));
  // Extended-precision quadrature of the substituted integral.
  CHECK(cusp_criterion(g3, 2, 2.0).value == doctest::Approx(2.16755805991983333).epsilon(2e-2));
}

TEST_CASE("property: analytic and numeric paths agree") {
  for (double a : {1.0, 1.5, 2.0, 3.0}) {
    const auto h = ProfileFunction::power(a);
    for (double p : {1.5, 2.0, 3.0}) {
      const auto an = cusp_criterion(h, 2, p, CriterionPath::analytic);
      const auto nu = cusp_criterion(h, 2, p, CriterionPath::numeric);
      CHECK(an.divergent == nu.divergent);
      if (!an.divergent) CHECK(nu.value == doctest::Approx(an.value).epsilon(1e-6));
    }
    const auto bb = bbc_criterion(h, 2, CriterionPath::numeric);
    CHECK(bb.divergent == bbc_criterion(h, 2).divergent);
  }
  for (double g : {1.5, 3.0}) {
    const auto h = ProfileFunction::power_log(2.0, g);
    CHECK(cusp_criterion(h, 2, 2.0, CriterionPath::numeric).divergent == cusp_criterion(h, 2, 2.0).divergent);
    CHECK(bbc_criterion(h, 2, CriterionPath::numeric).divergent == bbc_criterion(h, 2).divergent);
  }
}

TEST_CASE("numeric path handles tabulated profiles") {
  std::vector<double> t, hv;
  for (int k = 0; k <= 64; ++k) {
    t.push_back(k / 64.0);
    hv.push_back(std::pow(t.back(), 1.0));
  }
  const auto v = cusp_criterion(ProfileFunction::tabulated(t, hv), 2, 2.0);
  CHECK(v.path == CriterionPath::numeric);
  CHECK(v.verdict == Verdict::positive);
  CHECK(v.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-4));
  CHECK_THROWS_AS(cusp_criterion(ProfileFunction::tabulated(t, hv), 2, 2.0, CriterionPath::analytic), InvalidArgument);
}

TEST_CASE("summability classifier rules") {
  CHECK(classify_integral([](double t) { return 1.0 / t; }, 1.0).result == Summability::divergent);
  CHECK(classify_integral([](double t) { return std::pow(t, -0.5); }, 1.0).result == Summability::convergent);
  const auto slow = classify_integral([](double t) { return 1.0 / (t * std::pow(std::log(2.0 / t), 0.5)); }, 1.0);
  CHECK(slow.result == Summability::divergent);
  CHECK(slow.decay_power == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("inner density estimate") {
  const double t0 = half_volume_radius(1.0, 2);
  CHECK(t0 == doctest::Approx(std::sqrt(0.5 / kPi)));
  CHECK(isoperimetric_C(2) == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi))));
  CHECK(density_estimate(1.0, 2, 0.0, t0) == 0.0);
  CHECK(density_estimate(1e9, 2, 0.2, t0) < 1e-15);
  CHECK_THROWS_AS(density_estimate(1.0, 2, 0.5, t0), InvalidArgument);
  const auto sq = make_rectangle(0, 0, 1, 1);
  for (double G : {1.0, 10.0}) { // admissible: the corner squares need G >= 1
    const auto c = check_density(sq, {0.5, 0.0}, 0.2, G);
    CHECK(c.measured == doctest::Approx(kPi * 0.02));
    CHECK(c.ok);
  }
}

TEST_CASE("geometric inequalities on hand geometry") {
  const auto sq = make_rectangle(0, 0, 1, 1);
  const auto corners = candidate_samples(sq, 2.0, {CandidateFamily::corner_squares});
  const auto r = check_geometric_inequalities(sq, 0.0, 0.0, 1.0, corners);
  CHECK(r.G_a == doctest::Approx(1.0));
  CHECK(r.holds_a);
  const auto w = check_slice_inequalities(ProfileFunction::power(1.0), 2, 0.0, 0.0, 1.5, {0.05, 0.1, 0.3});
  CHECK(w.G_a == doctest::Approx(std::sqrt(2.0)));
  CandidateSample interior;
  interior.measures = {0.01, 0.0, 0.0, 0.3};
  const auto i = check_geometric_inequalities(sq, 0.0, 0.0, 1.0, {interior});
  CHECK(i.holds_a);
  CHECK(i.skipped_b == 1);
}

TEST_CASE("criteria csv") {
  std::ostringstream s;
  write_criteria_csv({cusp_criterion(ProfileFunction::power(1.5), 2, 2.0)}, s);
  CHECK(s.str().find("cusp,\"h=power(alpha=1.5);N=2;p=2\",analytic,positive") != std::string::npos);
}
