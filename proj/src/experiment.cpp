#include "robinlab/experiment.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace robin {

namespace {

namespace fs = std::filesystem;

// ---- config parsing -------------------------------------------------------

struct Reader {
  const json& j;
  std::string path;

  std::string at(const std::string& key) const { return path.empty() ? key : path + "." + key; }
  bool has(const char* key) const { return j.contains(key); }

  Reader child(const char* key) const {
    const json& c = j.at(key);
    if (!c.is_object()) throw ConfigError(at(key), "expected an object");
    return {c, at(key)};
  }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError(at(key), "expected a number");
    return j[key].get<double>();
  }
  double number(const char* key) const {
    if (!has(key)) throw ConfigError(at(key), "missing required field");
    return number(key, 0.0);
  }
  int integer(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    if (!j[key].is_number_integer()) throw ConfigError(at(key), "expected an integer");
    return j[key].get<int>();
  }
  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    if (!j[key].is_boolean()) throw ConfigError(at(key), "expected true or false");
    return j[key].get<bool>();
  }
  std::string string(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    if (!j[key].is_string()) throw ConfigError(at(key), "expected a string");
    return j[key].get<std::string>();
  }
  std::vector<double> numbers(const char* key, std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    const json& a = j[key];
    if (!a.is_array()) throw ConfigError(at(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_number()) throw ConfigError(at(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(a[i].get<double>());
    }
    return out;
  }
  ProfileFunction profile(const char* key) const {
    if (!has(key)) throw ConfigError(at(key), "missing required field");
    return profile_function_from_json(j[key], at(key));
  }
};

void require(bool ok, const std::string& path, const std::string& message) {
  if (!ok) throw ConfigError(path, message);
}

void check_p(double p, const std::string& path) { require(p > 1.0 && std::isfinite(p), path, "p must exceed 1"); }
void check_beta(double b, const std::string& path) {
  require(b >= 0.0 && std::isfinite(b), path, "beta must be finite and >= 0");
}

DomainSpec parse_domain(const Reader& r) {
  DomainSpec d;
  d.shape = r.string("shape", "");
  const double beta = r.number("beta", 1.0);
  check_beta(beta, r.at("beta"));
  try {
    if (d.shape == "rectangle") {
      d.polygon = make_rectangle(r.number("x0", 0.0), r.number("y0", 0.0), r.number("x1"), r.number("y1"), beta);
    } else if (d.shape == "regular_polygon") {
      d.polygon = make_regular_polygon(r.integer("n", 128), r.number("radius", 1.0), beta);
    } else if (d.shape == "polygon") {
      d.polygon = polygon_from_json(r.j, r.path);
    } else if (d.shape == "cusp") {
      CuspPolygonOptions co;
      co.beta = beta;
      co.right_tag = edge_tag_from_string(r.string("right_tag", "dirichlet"));
      co.grading = r.number("grading", co.grading);
      d.cusp = r.profile("h");
      d.polygon = build_cusp_polygon(*d.cusp, r.number("x_min", 0.0), r.number("x_max", d.cusp->t_max()),
                                     r.integer("n_boundary", 200), co);
    } else {
      throw ConfigError(r.at("shape"), "unknown shape '" + d.shape +
                                           "' (rectangle, regular_polygon, polygon, cusp)");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(r.path, e.what());
  }
  return d;
}

TrendOptions parse_trend_options(const Reader& r, TrendOptions o) {
  o.x_max = r.number("x_max", o.x_max);
  o.f = r.number("f", o.f);
  o.dirichlet_value = r.number("dirichlet_value", o.dirichlet_value);
  o.region_x = r.number("region_x", o.region_x);
  o.n_boundary = r.integer("n_boundary", o.n_boundary);
  o.h_target = r.number("h_target", o.h_target);
  o.stabilize_tol = r.number("stabilize_tol", o.stabilize_tol);
  o.decay_factor = r.number("decay_factor", o.decay_factor);
  require(o.h_target > 0.0, r.at("h_target"), "must be positive");
  require(o.region_x > 0.0 && o.region_x < o.x_max, r.at("region_x"), "must lie in (0, x_max)");
  return o;
}

CriterionPath parse_path(const std::string& s, const std::string& where) {
  for (auto p : {CriterionPath::automatic, CriterionPath::analytic, CriterionPath::numeric})
    if (to_string(p) == s) return p;
  throw ConfigError(where, "unknown path '" + s + "' (automatic, analytic, numeric)");
}

} // namespace

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("$", "config must be a JSON object");
  const Reader root{j, ""};
  ExperimentConfig c;
  const std::string schema = root.string("schema", "");
  require(schema == kConfigSchema, "schema", "expected \"" + std::string(kConfigSchema) + "\"");
  c.name = root.string("name", c.name);
  c.seed = static_cast<std::uint64_t>(root.number("seed", 0.0));
  if (root.has("output")) c.out_dir = root.child("output").string("dir", c.out_dir);

  if (root.has("domain")) c.domain = parse_domain(root.child("domain"));

  if (root.has("mesh")) {
    const Reader m = root.child("mesh");
    c.h_target = m.number("h_target", c.h_target);
    c.mesh.min_angle_deg = m.number("min_angle_deg", c.mesh.min_angle_deg);
    c.mesh.max_triangles = static_cast<std::size_t>(m.number("max_triangles", double(c.mesh.max_triangles)));
    c.grading.ratio = m.number("grading_ratio", c.grading.ratio);
    c.grading.depth = m.integer("grading_depth", c.grading.depth);
    if (m.has("tip_size")) c.grading = grading_for_tip(m.number("tip_size"), c.h_target, c.grading.ratio);
    require(c.h_target > 0.0, m.at("h_target"), "must be positive");
  }

  if (root.has("run")) {
    const Reader r = root.child("run");
    c.run.p = r.number("p", 2.0);
    check_p(c.run.p, r.at("p"));
    if (r.has("beta")) {
      c.run.beta = r.number("beta");
      check_beta(*c.run.beta, r.at("beta"));
    }
    c.run.f_constant = r.number("f", 1.0);
    require(std::isfinite(c.run.f_constant), r.at("f"), "must be finite");
    c.dirichlet_value = r.number("dirichlet_value", c.dirichlet_value);
  }

  if (root.has("solver")) {
    const Reader s = root.child("solver");
    auto& o = c.run.solver;
    o.rel_energy_tol = s.number("rel_energy_tol", o.rel_energy_tol);
    o.residual_tol = s.number("residual_tol", o.residual_tol);
    o.eps_start = s.number("eps_start", o.eps_start);
    o.eps_end = s.number("eps_end", o.eps_end);
    o.eps_levels = s.integer("eps_levels", o.eps_levels);
    o.max_newton_per_level = s.integer("max_newton_per_level", o.max_newton_per_level);
  }

  if (root.has("levelsets")) {
    const Reader l = root.child("levelsets");
    c.n_levels = l.integer("n_levels", c.n_levels);
    c.check_tol = l.number("tol", c.check_tol);
    c.coarea_points = l.integer("coarea_points", c.coarea_points);
    if (l.has("coarea_T")) c.coarea_T = l.number("coarea_T");
    require(c.n_levels >= 1, l.at("n_levels"), "must be at least 1");
    require(c.coarea_points >= 2, l.at("coarea_points"), "must be at least 2");
  }

  if (root.has("profile")) {
    const Reader p = root.child("profile");
    c.profile_source = p.string("source", c.profile_source);
    require(c.profile_source == "candidates" || c.profile_source == "slices", p.at("source"),
            "expected \"candidates\" or \"slices\"");
    if (p.has("families")) {
      const json& fams = p.j["families"];
      require(fams.is_array(), p.at("families"), "expected an array of family names");
      for (std::size_t i = 0; i < fams.size(); ++i) {
        const std::string where = p.at("families") + "[" + std::to_string(i) + "]";
        require(fams[i].is_string(), where, "expected a string");
        try {
          c.families.push_back(candidate_family_from_string(fams[i].get<std::string>()));
        } catch (const InvalidArgument& e) {
          throw ConfigError(where, e.what());
        }
      }
    }
    c.profile.per_decade = p.integer("per_decade", c.profile.per_decade);
    c.profile.decades = p.number("decades", c.profile.decades);
    c.profile.margin = p.number("margin", c.profile.margin);
  }
  if (c.profile_source == "slices")
    require(c.domain && c.domain->cusp, "profile.source", "slices need a cusp domain");

  if (root.has("bounds")) {
    const Reader b = root.child("bounds");
    c.positivity.rel_tol = b.number("rel_tol", c.positivity.rel_tol);
    c.positivity.soundness_tol = b.number("soundness_tol", c.positivity.soundness_tol);
  }

  if (root.has("trend")) {
    const Reader t = root.child("trend");
    TrendSpec ts;
    ts.h = t.profile("h");
    ts.p = t.number("p", 2.0);
    check_p(ts.p, t.at("p"));
    ts.beta = t.number("beta", 1.0);
    check_beta(ts.beta, t.at("beta"));
    ts.deltas = t.numbers("deltas", {0.1, 0.05, 0.025, 0.0125});
    ts.options = parse_trend_options(t, ts.options);
    c.trend = ts;
  }

  if (root.has("criteria")) {
    const json& arr = j["criteria"];
    require(arr.is_array(), "criteria", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "criteria[" + std::to_string(i) + "]";
      require(arr[i].is_object(), where, "expected an object");
      const Reader r{arr[i], where};
      CriterionSpec s;
      s.kind = r.string("kind", "");
      s.N = r.integer("N", 2);
      require(s.N >= 2, r.at("N"), "must be at least 2");
      s.path = parse_path(r.string("path", "automatic"), r.at("path"));
      if (s.kind == "cusp" || s.kind == "bbc") {
        s.h = r.profile("h");
        if (s.kind == "cusp") s.p = r.number("p", 2.0);
      } else if (s.kind == "exponent_M") {
        s.p = r.number("p", 2.0);
        s.a = r.number("a");
        s.b = r.number("b");
      } else {
        throw ConfigError(r.at("kind"), "unknown criterion '" + s.kind + "' (cusp, bbc, exponent_M)");
      }
      check_p(s.p, r.at("p"));
      c.criteria.push_back(std::move(s));
    }
  }

  if (root.has("sweep")) {
    const Reader s = root.child("sweep");
    SweepSpec sw;
    sw.family = s.string("family", sw.family);
    require(sw.family == "power" || sw.family == "power_log", s.at("family"), "expected power or power_log");
    sw.alpha = s.numbers("alpha", sw.alpha);
    sw.gamma = s.numbers("gamma", sw.gamma);
    sw.p = s.numbers("p", sw.p);
    sw.beta = s.numbers("beta", sw.beta);
    sw.N = s.integer("N", sw.N);
    sw.numeric_check = s.boolean("numeric_check", sw.numeric_check);
    for (std::size_t i = 0; i < sw.p.size(); ++i) check_p(sw.p[i], s.at("p") + "[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < sw.beta.size(); ++i)
      check_beta(sw.beta[i], s.at("beta") + "[" + std::to_string(i) + "]");
    if (s.has("solve")) {
      const Reader v = s.child("solve");
      sw.solve = parse_trend_options(v, TrendOptions{});
      sw.solve_delta = v.number("delta", sw.solve_delta);
      require(sw.solve_delta > 0.0, v.at("delta"), "must be positive");
    }
    c.sweep = sw;
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path, std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

// ---- run ------------------------------------------------------------------

namespace {

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << std::setprecision(17);
  return out;
}

std::vector<CandidateFamily> applicable_families(const ExperimentConfig& cfg) {
  std::vector<CandidateFamily> fams = cfg.families;
  const bool convex = is_convex(cfg.domain->polygon);
  if (fams.empty()) {
    fams = {CandidateFamily::corner_disks, CandidateFamily::corner_squares, CandidateFamily::half_planes};
    if (convex) fams.push_back(CandidateFamily::boundary_distance);
  } else if (!convex) {
    std::erase(fams, CandidateFamily::boundary_distance);
  }
  return fams;
}

CriterionVerdict evaluate(const CriterionSpec& s) {
  if (s.kind == "cusp") return cusp_criterion(*s.h, s.N, s.p, s.path);
  if (s.kind == "bbc") return bbc_criterion(*s.h, s.N, s.path);
  const auto m = exponent_M(s.p, s.N, s.a, s.b);
  CriterionVerdict v;
  v.name = "exponent_M";
  v.inputs = {{"p", std::to_string(s.p)}, {"N", std::to_string(s.N)}, {"a", std::to_string(s.a)},
              {"b", std::to_string(s.b)}};
  v.value = m.value;
  v.verdict = m.verdict;
  return v;
}

} // namespace

RunOutcome run_experiment(const ExperimentConfig& cfg, const std::string& out_dir, int threads, std::ostream* log) {
  RunOutcome out;
  std::ostringstream summary;
  summary << std::setprecision(6);
  json& rep = out.report;
  rep["schema"] = kConfigSchema;
  rep["name"] = cfg.name;
  auto note = [&](const std::string& s) {
    if (log) *log << s << '\n';
  };
  try {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    summary << "experiment " << cfg.name << "\n";

    if (cfg.domain) {
      note("meshing " + cfg.domain->shape);
      auto mesh = std::make_shared<const Mesh>(triangulate(cfg.domain->polygon, cfg.h_target, cfg.grading, cfg.mesh));
      const auto q = mesh_quality_report(*mesh);
      rep["domain"] = {{"shape", cfg.domain->shape}, {"area", cfg.domain->polygon.area()}};
      if (cfg.domain->cusp) rep["domain"]["h"] = to_json(*cfg.domain->cusp);
      rep["mesh"] = {{"nodes", mesh->n_nodes()},
                     {"triangles", mesh->n_triangles()},
                     {"min_angle_deg", q.min_angle_deg},
                     {"min_angle_unprotected_deg", q.min_angle_unprotected_deg},
                     {"protected", q.n_protected}};
      summary << "mesh: " << mesh->n_nodes() << " nodes, " << mesh->n_triangles() << " triangles\n";

      Constraints constraints;
      for (const auto& e : cfg.domain->polygon.edges)
        if (e.tag == EdgeTag::dirichlet) constraints[EdgeTag::dirichlet] = cfg.dirichlet_value;
      note("solving");
      const SolutionField field = minimize(mesh, cfg.run, constraints);
      const double umin = field.u.minCoeff(), umax = field.u.maxCoeff();
      rep["solver"] = to_json(field.diagnostics);
      rep["energy"] = number(field.energy);
      rep["min_u"] = umin;
      rep["max_u"] = umax;
      summary << "solve: p=" << cfg.run.p << ", " << field.diagnostics.iterations << " Newton steps, converged="
              << (field.diagnostics.converged ? "yes" : "no") << "\n"
              << "u range: [" << umin << ", " << umax << "]\n";
      if (!field.diagnostics.converged) out.failures.push_back("solver did not converge");
      {
        auto f = open_out(dir / "solution.csv");
        write_solution_csv(field, f);
      }

      const auto grid = interior_grid(umin, umax, cfg.n_levels);
      {
        auto f = open_out(dir / "level_stats.csv");
        write_level_stats_csv(field, grid, f, 1.0, cfg.check_tol);
      }
      json cacc = json::array(), gb = json::array();
      int cacc_fail = 0, gb_fail = 0;
      if (umax > umin) {
        for (double t : grid) {
          const auto c = check_caccioppoli(field, t, 1.0, cfg.check_tol);
          const auto g = check_g_bound(field, t, 1.0, cfg.check_tol);
          cacc_fail += !c.ok;
          gb_fail += !g.ok;
          cacc.push_back(to_json(c));
          gb.push_back(to_json(g));
        }
        const auto co = check_coarea(field, cfg.coarea_T.value_or(umax), cfg.coarea_points);
        rep["coarea"] = to_json(co);
        summary << "coarea: relative error " << co.rel_error << "\n";
      }
      rep["caccioppoli"] = cacc;
      rep["g_bound"] = gb;
      summary << "caccioppoli: " << grid.size() - cacc_fail << "/" << grid.size() << " pass; g bound: "
              << grid.size() - gb_fail << "/" << grid.size() << " pass\n";
      if (cacc_fail) out.failures.push_back(std::to_string(cacc_fail) + " Caccioppoli checks failed");
      if (gb_fail) out.failures.push_back(std::to_string(gb_fail) + " gradient bound checks failed");

      note("profile");
      ProfileCurve curve;
      if (cfg.profile_source == "slices") {
        const auto& h = *cfg.domain->cusp;
        curve = slice_profile(h, 2, cfg.run.p, slice_t_grid(h, 2, cfg.run.p, cfg.profile), cfg.profile);
      } else {
        curve = candidate_profile(cfg.domain->polygon, cfg.run.p, applicable_families(cfg), cfg.profile);
      }
      rep["profile"] = to_json(curve);
      {
        auto f = open_out(dir / "profile.csv");
        write_profile_csv(curve, f);
      }
      summary << "profile: exponent " << curve.exponent << ", " << to_string(curve.certificate) << "\n";
      if (!curve.divergent)
        rep["local_comparison"] = to_json(local_profile_comparison(curve, mesh->area(), 2, cfg.run.p));

      const double beta = cfg.run.beta.value_or(cfg.domain->polygon.max_beta());
      const auto pos = compute_T(field, curve, beta, cfg.run.p, cfg.positivity);
      rep["positivity"] = to_json(pos);
      {
        auto f = open_out(dir / "positivity.json");
        f << to_json(pos).dump(2) << '\n';
      }
      summary << "positivity: T=" << pos.T << ", T/2=" << pos.lower_bound << ", measured min=" << pos.measured_min
              << ", slack=" << pos.slack << (pos.inconclusive ? " (inconclusive)" : "") << "\n";
      if (!pos.sound) out.failures.push_back("measured minimum below T/2 beyond tolerance");
    }

    if (cfg.trend) {
      note("trend");
      TrendOptions o = cfg.trend->options;
      o.threads = threads;
      const auto tr = local_positivity_trend(cfg.trend->h, cfg.trend->p, cfg.trend->beta, cfg.trend->deltas, o);
      rep["trend"] = to_json(tr);
      rep["trend"]["h"] = to_json(cfg.trend->h);
      auto f = open_out(dir / "trend.csv");
      f << "delta,min_value,n_triangles,converged,ok\n";
      for (const auto& p : tr.points)
        f << p.delta << ',' << p.min_value << ',' << p.n_triangles << ',' << p.converged << ',' << p.ok << '\n';
      summary << "trend " << cfg.trend->h.describe() << ": " << to_string(tr.classification)
              << " (spread " << tr.last_three_spread << ", factor " << tr.total_factor << ")\n";
      if (tr.partial) out.failures.push_back("trend is partial");
    }

    if (!cfg.criteria.empty()) {
      note("criteria");
      std::vector<CriterionVerdict> rows;
      json arr = json::array();
      for (const auto& s : cfg.criteria) {
        rows.push_back(evaluate(s));
        arr.push_back(to_json(rows.back()));
        summary << "criterion " << rows.back().name << " " << (s.h ? s.h->describe() : "") << ": "
                << to_string(rows.back().verdict) << "\n";
      }
      rep["criteria"] = arr;
      auto f = open_out(dir / "criteria.csv");
      write_criteria_csv(rows, f);
    }

    const bool unsound = !out.failures.empty();
    rep["soundness"] = {{"ok", !unsound}, {"failures", out.failures}};
    out.exit_code = unsound ? 2 : 0;
    summary << (unsound ? "FAILED soundness checks\n" : "all checks passed\n");
    for (const auto& f : out.failures) summary << "  - " << f << "\n";
    {
      auto f = open_out(dir / "report.json");
      f << rep.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.failures.push_back(e.what());
    summary << "error: " << e.what() << "\n";
  }
  out.summary = summary.str();
  try {
    auto f = open_out(fs::path(out_dir) / "summary.txt");
    f << out.summary;
  } catch (const std::exception&) {
  }
  return out;
}

// ---- sweep ----------------------------------------------------------------

std::vector<SweepRow> sweep_rows(const SweepSpec& spec, int threads) {
  std::vector<SweepRow> rows;
  for (double a : spec.alpha)
    for (double g : spec.gamma)
      for (double p : spec.p)
        for (double b : spec.beta) {
          SweepRow r;
          r.family = spec.family;
          r.alpha = a;
          r.gamma = spec.family == "power" ? 0.0 : g;
          r.p = p;
          r.beta = b;
          r.N = spec.N;
          rows.push_back(r);
        }

  auto fill = [&](SweepRow& r) {
    try {
      const auto h = r.family == "power" ? ProfileFunction::power(r.alpha) : ProfileFunction::power_log(r.alpha, r.gamma);
      const auto c = cusp_criterion(h, r.N, r.p);
      const auto b = bbc_criterion(h, r.N);
      r.cusp_verdict = to_string(c.verdict);
      r.cusp_value = c.value;
      r.bbc_verdict = to_string(b.verdict);
      r.bbc_value = b.value;
      if (spec.numeric_check) {
        r.cusp_numeric = to_string(cusp_criterion(h, r.N, r.p, CriterionPath::numeric).numeric.result);
        r.bbc_numeric = to_string(bbc_criterion(h, r.N, CriterionPath::numeric).numeric.result);
      }
      if (spec.solve) {
        const auto tr = local_positivity_trend(h, r.p, r.beta, {spec.solve_delta}, *spec.solve);
        if (!tr.points.front().ok) throw Error(tr.points.front().error);
        r.min_u = tr.points.front().min_value;
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  };

  const int n = std::max(1, std::min<int>(threads, static_cast<int>(rows.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) fill(rows[i]);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  const auto old = out.precision(17);
  out << "family,alpha,gamma,p,beta,N,cusp_verdict,cusp_value,cusp_numeric,bbc_verdict,bbc_value,bbc_numeric,min_u,"
         "error\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.alpha << ',' << r.gamma << ',' << r.p << ',' << r.beta << ',' << r.N << ','
        << r.cusp_verdict << ',' << r.cusp_value << ',' << r.cusp_numeric << ',' << r.bbc_verdict << ','
        << r.bbc_value << ',' << r.bbc_numeric << ',';
    if (r.min_u) out << *r.min_u;
    out << ",\"" << r.error << "\"\n";
  }
  out.precision(old);
}

RunOutcome run_sweep(const ExperimentConfig& cfg, const std::string& out_dir, int threads, std::ostream* log) {
  RunOutcome out;
  try {
    if (!cfg.sweep) throw ConfigError("sweep", "missing required field");
    fs::create_directories(out_dir);
    if (log) *log << "sweeping " << cfg.name << '\n';
    const auto rows = sweep_rows(*cfg.sweep, threads);
    auto f = open_out(fs::path(out_dir) / "sweep.csv");
    write_sweep_csv(rows, f);
    std::ostringstream s;
    s << "sweep " << cfg.name << ": " << rows.size() << " cells\n";
    int failed = 0;
    json arr = json::array();
    for (const auto& r : rows) {
      failed += !r.error.empty();
      s << "  " << r.family << " alpha=" << r.alpha << " gamma=" << r.gamma << " p=" << r.p << " beta=" << r.beta
        << ": cusp " << r.cusp_verdict << ", bbc " << r.bbc_verdict;
      if (r.min_u) s << ", min u " << *r.min_u;
      if (!r.error.empty()) s << " [error: " << r.error << "]";
      s << '\n';
    }
    if (failed) s << failed << " cells failed\n";
    out.summary = s.str();
    out.report = {{"schema", kConfigSchema}, {"name", cfg.name}, {"cells", rows.size()}, {"failed_cells", failed}};
    auto t = open_out(fs::path(out_dir) / "summary.txt");
    t << out.summary;
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.failures.push_back(e.what());
    out.summary = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

} // namespace robin
