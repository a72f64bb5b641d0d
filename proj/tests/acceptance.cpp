// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run every criterion
//   acceptance 4 7        run the listed criteria
#include "robinlab/bounds.hpp"
#include "robinlab/criteria.hpp"

#include <boost/rational.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace robin;

namespace {

constexpr double kDiskTol = 0.02;
constexpr double kDiskSeconds = 30.0;
constexpr double kStripTol = 0.03;
constexpr double kTrendSeconds = 300.0;
constexpr double kSoundnessTol = 0.05;
constexpr double kCheckSlack = 0.05;
constexpr int kCheckPoints = 20;
constexpr double kSlopeLo = 0.60, kSlopeHi = 0.75;
constexpr double kCoareaTol = 0.01;
constexpr int kCoareaPoints = 100;
const std::vector<double> kDeltas{0.1, 0.05, 0.025, 0.0125};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

double rel(double x, double ref) { return std::abs(x / ref - 1.0); }

// ---- shared runs ----------------------------------------------------------

struct DiskRun {
  SolutionField field;
  double seconds;
};

const DiskRun& disk_run() {
  static const DiskRun run = [] {
    const auto t0 = Clock::now();
    auto mesh = std::make_shared<const Mesh>(triangulate(make_regular_polygon(128, 1.0, 1.0), 0.02));
    RunParams rp;
    rp.beta = 1.0;
    auto field = minimize(mesh, rp);
    return DiskRun{std::move(field), seconds_since(t0)};
  }();
  return run;
}

const SolutionField& strip_run() {
  static const SolutionField field = [] {
    // Insulated long sides reduce the problem to the 1D Robin ODE along x.
    PolygonDomain d = make_rectangle(0, 0, 1, 0.02, 1.0);
    d.edges[0].beta = d.edges[2].beta = 0.0;
    return minimize(std::make_shared<const Mesh>(triangulate(d, 0.01)), RunParams{});
  }();
  return field;
}

const PolygonDomain& unit_square() {
  static const PolygonDomain d = make_rectangle(0, 0, 1, 1, 1.0);
  return d;
}

const SolutionField& square_run() {
  static const SolutionField field =
      minimize(std::make_shared<const Mesh>(triangulate(unit_square(), 0.05)), RunParams{});
  return field;
}

const ProfileCurve& square_curve() {
  static const ProfileCurve curve =
      candidate_profile(unit_square(), 2.0,
                        {CandidateFamily::corner_disks, CandidateFamily::corner_squares, CandidateFamily::half_planes,
                         CandidateFamily::boundary_distance});
  return curve;
}

/// The truncated-cusp solves behind the trend experiment, one per (alpha, delta).
std::vector<std::pair<std::string, SolutionField>> cusp_runs() {
  std::vector<std::pair<std::string, SolutionField>> out;
  const TrendOptions o;
  for (double alpha : {1.5, 3.0})
    for (double delta : kDeltas) {
      CuspPolygonOptions co;
      co.right_tag = EdgeTag::dirichlet;
      const auto dom = build_cusp_polygon(ProfileFunction::power(alpha), delta, o.x_max, o.n_boundary, co);
      auto mesh = std::make_shared<const Mesh>(triangulate(dom, o.h_target));
      std::ostringstream name;
      name << "cusp alpha=" << alpha << " delta=" << delta;
      out.emplace_back(name.str(), minimize(mesh, RunParams{}, {{EdgeTag::dirichlet, o.dirichlet_value}}));
    }
  return out;
}

// ---- criteria -------------------------------------------------------------

Outcome disk_oracle() {
  const auto& run = disk_run();
  const auto& f = run.field;
  double boundary_min = 1e300;
  for (const auto& e : f.mesh->boundary_edges) boundary_min = std::min({boundary_min, f.u[e.a], f.u[e.b]});
  int center = 0;
  for (std::size_t i = 0; i < f.mesh->n_nodes(); ++i)
    if (f.mesh->nodes[i].norm() < f.mesh->nodes[center].norm()) center = static_cast<int>(i);
  const double uc = f.u[center];
  std::ostringstream s;
  s << "boundary min " << boundary_min << " (oracle 0.5), center " << uc << " (oracle 0.75), " << run.seconds
    << " s";
  return {rel(boundary_min, 0.5) <= kDiskTol && rel(uc, 0.75) <= kDiskTol && run.seconds < kDiskSeconds, s.str()};
}

Outcome strip_oracle() {
  const double m = min_value(strip_run());
  std::ostringstream s;
  s << "min u " << m << " (oracle 0.5)";
  return {rel(m, 0.5) <= kStripTol, s.str()};
}

Outcome critical_exponent() {
  using Q = boost::rational<long long>;
  const auto crit = exponent_M(Q(2), 2, Q(1, 3), Q(1, 2));
  const auto lip = exponent_M(Q(2), 2, Q(0), Q(0));
  std::ostringstream s;
  s << "M(2,2,1/3,1/2) = " << crit.value << " (" << to_string(crit.verdict) << "), M(2,2,0,0) = " << lip.value;
  return {crit.value == Q(1) && crit.verdict == Verdict::critical && lip.value == Q(3, 2), s.str()};
}

Outcome cusp_threshold() {
  bool ok = true;
  std::ostringstream s;
  const std::map<double, Verdict> expect{{1.5, Verdict::positive}, {2.0, Verdict::critical}, {3.0, Verdict::negative}};
  for (const auto& [alpha, want] : expect) {
    const auto h = ProfileFunction::power(alpha);
    const auto an = cusp_criterion(h, 2, 2.0, CriterionPath::analytic);
    const auto nu = cusp_criterion(h, 2, 2.0, CriterionPath::numeric);
    ok = ok && an.verdict == want && an.divergent == nu.divergent && nu.numeric.result != Summability::inconclusive;
    if (alpha == 3.0) ok = ok && an.divergent;
    s << "alpha=" << alpha << ": " << to_string(an.verdict) << "/" << to_string(nu.numeric.result) << "; ";
  }
  return {ok, s.str()};
}

Outcome criteria_contrast() {
  bool ok = true;
  std::ostringstream s;
  for (double gamma : {1.5, 3.0}) {
    const auto h = ProfileFunction::power_log(2.0, gamma);
    const auto paper = cusp_criterion(h, 2, 2.0), bbc = bbc_criterion(h, 2);
    const auto paper_n = cusp_criterion(h, 2, 2.0, CriterionPath::numeric);
    const auto bbc_n = bbc_criterion(h, 2, CriterionPath::numeric);
    const bool paper_conv = gamma > 2.0;
    ok = ok && paper.divergent == !paper_conv && paper_n.divergent == !paper_conv && !bbc.divergent &&
         !bbc_n.divergent && bbc.verdict == Verdict::positive;
    s << "gamma=" << gamma << ": cusp " << (paper.divergent ? "divergent" : "convergent") << ", bbc "
      << (bbc.divergent ? "divergent" : "convergent") << "; ";
  }
  return {ok, s.str()};
}

Outcome positivity_trend() {
  const auto t0 = Clock::now();
  const auto mid = local_positivity_trend(ProfileFunction::power(1.5), 2.0, 1.0, kDeltas);
  const auto sharp = local_positivity_trend(ProfileFunction::power(3.0), 2.0, 1.0, kDeltas);
  const double secs = seconds_since(t0);
  std::ostringstream s;
  s << "alpha=1.5 " << to_string(mid.classification) << " (last-three spread " << mid.last_three_spread
    << "), alpha=3 " << to_string(sharp.classification) << " (factor " << sharp.total_factor << "), " << secs
    << " s; mins 1.5:";
  for (const auto& p : mid.points) s << ' ' << p.min_value;
  return {mid.classification == TrendClass::stabilizing && sharp.classification == TrendClass::decaying &&
              secs < kTrendSeconds,
          s.str()};
}

Outcome soundness() {
  PositivityOptions o;
  o.soundness_tol = kSoundnessTol;
  const auto r = compute_T(square_run(), square_curve(), 1.0, 2.0, o);
  std::ostringstream s;
  s << "T " << r.T << ", T/2 " << r.lower_bound << ", measured min " << r.measured_min << ", certificate "
    << to_string(r.certificate);
  return {r.T > 0.0 && r.measured_min >= r.lower_bound - kSoundnessTol * r.T, s.str()};
}

Outcome caccioppoli_suite() {
  std::vector<std::pair<std::string, SolutionField>> runs{
      {"disk", disk_run().field}, {"strip", strip_run()}, {"square", square_run()}};
  for (auto& r : cusp_runs()) runs.push_back(std::move(r));
  int checked = 0, failed = 0, control_hits = 0;
  std::ostringstream s;
  for (const auto& [name, field] : runs) {
    if (!field.diagnostics.converged) continue;
    const auto grid = interior_grid(field.u.minCoeff(), field.u.maxCoeff(), kCheckPoints);
    const auto doubled = field.with_values(2.0 * field.u);
    for (double t : grid) {
      ++checked;
      const bool ok = check_caccioppoli(field, t, 1.0, kCheckSlack).ok && check_g_bound(field, t, 1.0, kCheckSlack).ok;
      if (!ok) {
        ++failed;
        s << "[" << name << " fails at t=" << t << "] ";
      }
      control_hits += !check_caccioppoli(doubled, t, 1.0, kCheckSlack).ok;
    }
  }
  s << checked << " checks on " << runs.size() << " runs, " << failed << " failed; negative control (x2) failed at "
    << control_hits << " t values";
  return {failed == 0 && control_hits > 0, s.str()};
}

Outcome profile_slopes() {
  const double sq = square_curve().exponent;
  const auto wedge = ProfileFunction::power(1.0);
  const double we = slice_profile(wedge, 2, 2.0, slice_t_grid(wedge, 2, 2.0)).exponent;
  std::ostringstream s;
  s << "square candidate exponent " << sq << ", wedge slice exponent " << we << " (hand value 2/3)";
  return {sq >= kSlopeLo && sq <= kSlopeHi && we >= kSlopeLo && we <= kSlopeHi, s.str()};
}

Outcome coarea() {
  const auto& f = disk_run().field;
  const auto c = check_coarea(f, f.u.maxCoeff(), kCoareaPoints);
  std::ostringstream s;
  s << "integral of Pi " << c.integral << " vs g(T) " << c.g << ", relative error " << c.rel_error;
  return {c.rel_error <= kCoareaTol, s.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
      {"disk radial oracle", disk_oracle},
      {"thin strip oracle", strip_oracle},
      {"critical exponent M", critical_exponent},
      {"cusp threshold alpha = p", cusp_threshold},
      {"power-log criteria contrast", criteria_contrast},
      {"local positivity trend", positivity_trend},
      {"lower bound soundness", soundness},
      {"Caccioppoli property suite", caccioppoli_suite},
      {"profile slopes", profile_slopes},
      {"coarea identity", coarea},
  };
  return list;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) which.push_back(i);
  int failures = 0;
  for (int n : which) {
    if (n < 1 || n > static_cast<int>(criteria().size())) {
      std::cerr << "unknown criterion " << n << '\n';
      return 2;
    }
    const auto& [name, fn] = criteria()[n - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << n << "] " << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
