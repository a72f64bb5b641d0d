#include "robinlab/experiment.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace robin;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("robinlab_test_" + name);
  fs::remove_all(d);
  return d;
}

std::string error_path(const json& j) {
  try {
    parse_config(j);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "";
}

} // namespace

TEST_CASE("schema violations name the field") {
  CHECK(error_path(json{{"schema", "other"}}) == "schema");
  CHECK(error_path(json{{"schema", "robinlab/1"}, {"run", {{"p", 1.0}}}}) == "run.p");
  CHECK(error_path(json{{"schema", "robinlab/1"}, {"run", {{"beta", -1.0}}}}) == "run.beta");
  CHECK(error_path(json{{"schema", "robinlab/1"}, {"domain", {{"shape", "torus"}}}}) == "domain.shape");
  CHECK(error_path(json{{"schema", "robinlab/1"}, {"profile", {{"families", {"spheres"}}}}}) == "profile.families[0]");
  CHECK(error_path(json{{"schema", "robinlab/1"}, {"criteria", {{{"kind", "cusp"}}}}}) == "criteria[0].h");
  CHECK(error_path(json{{"schema", "robinlab/1"},
                        {"trend", {{"h", {{"family", "power"}, {"alpha", 0.5}}}}}}) == "trend.h");
}

TEST_CASE("malformed file") {
  const auto d = scratch_dir("malformed");
  fs::create_directories(d);
  std::ofstream(d / "bad.json") << "{ \"schema\": ";
  CHECK_THROWS_AS(load_config((d / "bad.json").string()), ConfigError);
  CHECK_THROWS_AS(load_config((d / "missing.json").string()), ConfigError);
}

TEST_CASE("empty grid gives a header-only table") {
  SweepSpec s;
  s.alpha.clear();
  const auto rows = sweep_rows(s);
  CHECK(rows.empty());
  std::ostringstream out;
  write_sweep_csv(rows, out);
  CHECK(out.str() == "family,alpha,gamma,p,beta,N,cusp_verdict,cusp_value,cusp_numeric,bbc_verdict,bbc_value,"
                     "bbc_numeric,min_u,error\n");
}

TEST_CASE("criteria sweep rows are ordered and threaded deterministically") {
  SweepSpec s;
  s.alpha = {1.0, 1.5, 2.0, 3.0};
  const auto one = sweep_rows(s, 1), four = sweep_rows(s, 4);
  REQUIRE(one.size() == 4);
  CHECK(one[1].cusp_verdict == "positive");
  CHECK(one[2].cusp_verdict == "critical");
  CHECK(one[3].cusp_verdict == "negative");
  std::ostringstream a, b;
  write_sweep_csv(one, a);
  write_sweep_csv(four, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("sweep records per-cell failures and continues") {
  SweepSpec s;
  s.alpha = {0.5, 1.5};
  const auto rows = sweep_rows(s);
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[1].error.empty());
}

TEST_CASE("square run writes its artifacts reproducibly") {
  const json j = {{"schema", "robinlab/1"},
                  {"name", "square"},
                  {"domain", {{"shape", "rectangle"}, {"x1", 1}, {"y1", 1}}},
                  {"mesh", {{"h_target", 0.1}}},
                  {"run", {{"p", 2}, {"beta", 1}, {"f", 1}}},
                  {"criteria", {{{"kind", "exponent_M"}, {"p", 2}, {"a", 0}, {"b", 0}}}}};
  const auto cfg = parse_config(j);
  const auto d1 = scratch_dir("run1"), d2 = scratch_dir("run2");
  const auto r1 = run_experiment(cfg, d1.string());
  const auto r2 = run_experiment(cfg, d2.string());
  CHECK(r1.exit_code == 0);
  for (const char* f : {"solution.csv", "level_stats.csv", "profile.csv", "positivity.json", "criteria.csv",
                        "report.json", "summary.txt"}) {
    CHECK(fs::exists(d1 / f));
    CHECK(slurp(d1 / f) == slurp(d2 / f));
  }
  CHECK(r1.report["positivity"]["sound"].get<bool>());
  CHECK(r1.report["soundness"]["ok"].get<bool>());
}

TEST_CASE("execution errors give exit code 1") {
  ExperimentConfig cfg;
  DomainSpec d;
  d.polygon = make_rectangle(0, 0, 1, 1);
  d.shape = "rectangle";
  cfg.domain = d;
  cfg.h_target = 0.001;
  cfg.mesh.max_triangles = 100;
  CHECK(run_experiment(cfg, scratch_dir("budget").string()).exit_code == 1);
}

TEST_CASE("serialization round trips") {
  const auto h = ProfileFunction::power_log(2.0, 3.0);
  const auto back = profile_function_from_json(to_json(h));
  CHECK(back.describe() == h.describe());
  CHECK(back.t_max() == h.t_max());
  const auto sq = make_rectangle(0, 0, 2, 1, 0.5);
  const auto p = polygon_from_json(to_json(sq));
  CHECK(p.area() == doctest::Approx(2.0));
  CHECK(p.edges[2].beta == 0.5);
  CHECK(number(1.0 / 0.0) == "inf");
}
