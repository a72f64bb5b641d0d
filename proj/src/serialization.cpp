#include "robinlab/serialization.hpp"

#include <cmath>

namespace robin {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(path + "." + key, "missing required field");
  return *it;
}

double get_number(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number()) throw ConfigError(path + "." + key, "expected a number");
  return v.get<double>();
}

std::vector<double> get_numbers(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_array()) throw ConfigError(path + "." + key, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw ConfigError(path + "." + key + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

template <typename Fn>
auto rethrow_as_config(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(path, e.what());
  }
}

} // namespace

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

ProfileFunction profile_function_from_json(const json& j, const std::string& path) {
  const json& fam = field(j, "family", path);
  if (!fam.is_string()) throw ConfigError(path + ".family", "expected a string");
  const std::string family = fam.get<std::string>();
  return rethrow_as_config(path, [&] {
    if (family == "power") {
      const double t_max = j.contains("t_max") ? get_number(j, "t_max", path) : 1.0;
      return ProfileFunction::power(get_number(j, "alpha", path), t_max);
    }
    if (family == "power_log") {
      const double t_max = j.contains("t_max") ? get_number(j, "t_max", path) : 0.0;
      return ProfileFunction::power_log(get_number(j, "alpha", path), get_number(j, "gamma", path), t_max);
    }
    if (family == "tabulated") return ProfileFunction::tabulated(get_numbers(j, "t", path), get_numbers(j, "h", path));
    throw ConfigError(path + ".family", "unknown profile family '" + family + "'");
  });
}

json to_json(const ProfileFunction& h) {
  json j;
  j["family"] = to_string(h.family());
  switch (h.family()) {
  case ProfileFamily::power_log: j["gamma"] = h.gamma(); [[fallthrough]];
  case ProfileFamily::power:
    j["alpha"] = h.alpha();
    j["t_max"] = h.t_max();
    break;
  case ProfileFamily::tabulated:
    j["t"] = h.knots_t();
    j["h"] = h.knots_h();
    break;
  }
  return j;
}

PolygonDomain polygon_from_json(const json& j, const std::string& path) {
  const json& verts = field(j, "vertices", path);
  if (!verts.is_array()) throw ConfigError(path + ".vertices", "expected an array of [x, y] pairs");
  std::vector<Vec2> vs;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const json& v = verts[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw ConfigError(path + ".vertices[" + std::to_string(i) + "]", "expected [x, y]");
    vs.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  const std::size_t n = vs.size();
  PolygonDomain d;
  d.vertices = vs;
  d.edges.assign(n, {});
  if (j.contains("tag")) {
    const auto tag = rethrow_as_config(path + ".tag", [&] { return edge_tag_from_string(j["tag"].get<std::string>()); });
    for (auto& e : d.edges) e.tag = tag;
  }
  if (j.contains("beta"))
    for (auto& e : d.edges) e.beta = get_number(j, "beta", path);
  if (j.contains("tags")) {
    const json& tags = j["tags"];
    if (!tags.is_array() || tags.size() != n) throw ConfigError(path + ".tags", "expected one tag per edge");
    for (std::size_t i = 0; i < n; ++i)
      d.edges[i].tag = rethrow_as_config(path + ".tags[" + std::to_string(i) + "]",
                                         [&] { return edge_tag_from_string(tags[i].get<std::string>()); });
  }
  if (j.contains("betas")) {
    const auto betas = get_numbers(j, "betas", path);
    if (betas.size() != n) throw ConfigError(path + ".betas", "expected one beta per edge");
    for (std::size_t i = 0; i < n; ++i) d.edges[i].beta = betas[i];
  }
  if (j.contains("singular"))
    for (double s : get_numbers(j, "singular", path)) d.singular_vertices.push_back(static_cast<int>(s));
  rethrow_as_config(path, [&] {
    d.validate();
    return 0;
  });
  return d;
}

json to_json(const PolygonDomain& d) {
  json j;
  json verts = json::array(), tags = json::array(), betas = json::array();
  for (const auto& v : d.vertices) verts.push_back({v.x(), v.y()});
  for (const auto& e : d.edges) {
    tags.push_back(to_string(e.tag));
    betas.push_back(e.beta);
  }
  j["vertices"] = verts;
  j["tags"] = tags;
  j["betas"] = betas;
  j["singular"] = d.singular_vertices;
  return j;
}

json to_json(const SolverDiagnostics& d) {
  return {{"iterations", d.iterations},
          {"gradient_norm", number(d.gradient_norm)},
          {"residual_scale", number(d.residual_scale)},
          {"final_epsilon", d.final_epsilon},
          {"converged", d.converged}};
}

json to_json(const PositivityReport& r) {
  return {{"T", number(r.T)},
          {"lower_bound", number(r.lower_bound)},
          {"measured_min", number(r.measured_min)},
          {"slack", number(r.slack)},
          {"volume_at_T", number(r.volume_at_T)},
          {"half_volume", number(r.half_volume)},
          {"adm2_limit", number(r.adm2_limit)},
          {"adm2_value", number(r.adm2_value)},
          {"certificate", to_string(r.certificate)},
          {"inconclusive", r.inconclusive},
          {"degenerate", r.degenerate},
          {"sound", r.sound},
          {"note", r.note}};
}

json to_json(const TrendReport& r) {
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"delta", p.delta},
                   {"min_value", number(p.min_value)},
                   {"n_triangles", p.n_triangles},
                   {"converged", p.converged},
                   {"ok", p.ok},
                   {"error", p.error}});
  return {{"classification", to_string(r.classification)},
          {"last_three_spread", number(r.last_three_spread)},
          {"total_factor", number(r.total_factor)},
          {"partial", r.partial},
          {"stabilize_tol", r.options.stabilize_tol},
          {"decay_factor", r.options.decay_factor},
          {"region_x", r.options.region_x},
          {"points", pts}};
}

json to_json(const CriterionVerdict& v) {
  json inputs = json::object();
  for (const auto& [k, val] : v.inputs) inputs[k] = val;
  json j{{"name", v.name},
         {"inputs", inputs},
         {"path", to_string(v.path)},
         {"verdict", to_string(v.verdict)},
         {"divergent", v.divergent},
         {"value", number(v.value)}};
  if (!v.numeric.increments.empty())
    j["numeric"] = {{"result", to_string(v.numeric.result)},
                    {"rule", v.numeric.rule},
                    {"partial_sum", number(v.numeric.partial_sum)},
                    {"tail_estimate", number(v.numeric.tail_estimate)},
                    {"mean_ratio", number(v.numeric.mean_ratio)},
                    {"ratio_spread", number(v.numeric.ratio_spread)},
                    {"decay_power", number(v.numeric.decay_power)}};
  return j;
}

json to_json(const ProfileCurve& c) {
  return {{"kind", to_string(c.kind)},
          {"samples", c.m.size()},
          {"m_min", c.m.empty() ? json(nullptr) : number(c.m.front())},
          {"m_max", c.m.empty() ? json(nullptr) : number(c.m.back())},
          {"exponent", number(c.exponent)},
          {"coefficient", number(c.coefficient)},
          {"fit_samples", c.fit_samples},
          {"divergent", c.divergent},
          {"certificate", to_string(c.certificate)},
          {"margin", c.margin}};
}

json to_json(const LocalProfileComparison& c) {
  return {{"a_N", number(c.a_N)},
          {"eta", number(c.eta)},
          {"epsilon", number(c.epsilon)},
          {"C", number(c.C)},
          {"bound_exponent", number(c.bound.exponent)},
          {"curve_summable", c.curve_summable},
          {"bound_summable", c.bound_summable},
          {"equivalent", c.equivalent}};
}

json to_json(const GeometricInequalityReport& r) {
  return {{"a", r.a},
          {"b", r.b},
          {"G", r.G},
          {"G_a", number(r.G_a)},
          {"G_b", number(r.G_b)},
          {"samples", r.samples},
          {"skipped_b", r.skipped_b},
          {"holds_a", r.holds_a},
          {"holds_b", r.holds_b}};
}

json to_json(const CaccioppoliCheck& c) {
  return {{"t", c.t}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"ok", c.ok}};
}

json to_json(const GBoundCheck& c) {
  return {{"t", c.t}, {"g", number(c.g)}, {"bound", number(c.bound)}, {"ok", c.ok}};
}

json to_json(const CoareaCheck& c) {
  return {{"T", c.T}, {"integral", number(c.integral)}, {"g", number(c.g)}, {"rel_error", number(c.rel_error)}};
}

} // namespace robin
