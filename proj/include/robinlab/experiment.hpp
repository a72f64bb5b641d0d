#pragma once

#include "robinlab/serialization.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace robin {

inline constexpr const char* kConfigSchema = "robinlab/1";

struct DomainSpec {
  PolygonDomain polygon;
  std::optional<ProfileFunction> cusp; ///< set when the domain is a cusp polygon
  std::string shape;
};

struct CriterionSpec {
  std::string kind; ///< "cusp", "bbc" or "exponent_M"
  std::optional<ProfileFunction> h;
  int N = 2;
  double p = 2.0;
  double a = 0.0, b = 0.0;
  CriterionPath path = CriterionPath::automatic;
};

struct TrendSpec {
  ProfileFunction h = ProfileFunction::power(1.0);
  double p = 2.0;
  double beta = 1.0;
  std::vector<double> deltas;
  TrendOptions options;
};

/// Cartesian grid; a missing axis holds one default value, an empty one
/// yields no cells.
struct SweepSpec {
  std::string family = "power";
  std::vector<double> alpha{1.0}, gamma{0.0}, p{2.0}, beta{1.0};
  int N = 2;
  bool numeric_check = true;
  /// Per-cell truncated-cusp solve recording min u over {x1 <= region_x}.
  std::optional<TrendOptions> solve;
  double solve_delta = 0.0125;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::optional<DomainSpec> domain;
  double h_target = 0.05;
  MeshOptions mesh;
  Grading grading;
  RunParams run;
  double dirichlet_value = 1.0;
  int n_levels = 20;         ///< t-grid for the level-set checks
  double check_tol = 0.05;   ///< relative slack of the Caccioppoli-type checks
  int coarea_points = 100;
  std::optional<double> coarea_T;
  std::string profile_source = "candidates"; ///< or "slices" for cusp domains
  std::vector<CandidateFamily> families;     ///< empty: every applicable family
  ProfileOptions profile;
  PositivityOptions positivity;
  std::optional<TrendSpec> trend;
  std::vector<CriterionSpec> criteria;
  std::optional<SweepSpec> sweep;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
};

/// Throws ConfigError naming the offending field.
ExperimentConfig parse_config(const json& j);
ExperimentConfig load_config(const std::string& path);

struct RunOutcome {
  int exit_code = 0; ///< 0 ok, 1 execution error, 2 failed soundness check
  std::vector<std::string> failures;
  json report;
  std::string summary;
};

/// Executes the pipeline described by the config and writes its artifacts
/// into out_dir (solution.csv, level_stats.csv, profile.csv, positivity.json,
/// criteria.csv, trend.csv, report.json, summary.txt as applicable).
RunOutcome run_experiment(const ExperimentConfig& cfg, const std::string& out_dir, int threads = 1,
                          std::ostream* log = nullptr);

struct SweepRow {
  std::string family;
  double alpha = 0.0, gamma = 0.0, p = 0.0, beta = 0.0;
  int N = 2;
  std::string cusp_verdict, cusp_numeric, bbc_verdict, bbc_numeric;
  double cusp_value = 0.0, bbc_value = 0.0;
  std::optional<double> min_u;
  std::string error;
};

std::vector<SweepRow> sweep_rows(const SweepSpec& spec, int threads = 1);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// Writes sweep.csv into out_dir; exit code 0 unless the sweep could not run.
RunOutcome run_sweep(const ExperimentConfig& cfg, const std::string& out_dir, int threads = 1,
                     std::ostream* log = nullptr);

} // namespace robin
