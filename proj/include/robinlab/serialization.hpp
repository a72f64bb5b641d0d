#pragma once

#include "robinlab/bounds.hpp"
#include "robinlab/criteria.hpp"

#include <json.hpp>

namespace robin {

using json = nlohmann::ordered_json;

/// Raised for malformed configuration documents; `path` locates the field.
class ConfigError : public Error {
public:
  ConfigError(const std::string& path, const std::string& message)
      : Error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// {"family": "power", "alpha": 1.5, "t_max": 1}
/// {"family": "power_log", "alpha": 2, "gamma": 1.5}
/// {"family": "tabulated", "t": [...], "h": [...]}
ProfileFunction profile_function_from_json(const json& j, const std::string& path = "h");
json to_json(const ProfileFunction& h);

/// {"vertices": [[x, y], ...], "tags": [...], "betas": [...], "singular": [...]}
/// with scalar "tag" / "beta" accepted in place of the per-edge arrays.
PolygonDomain polygon_from_json(const json& j, const std::string& path = "domain");
json to_json(const PolygonDomain& d);

json to_json(const SolverDiagnostics& d);
json to_json(const PositivityReport& r);
json to_json(const TrendReport& r);
json to_json(const CriterionVerdict& v);
json to_json(const ProfileCurve& c); ///< summary: exponent, certificate, sample count
json to_json(const LocalProfileComparison& c);
json to_json(const GeometricInequalityReport& r);
json to_json(const CaccioppoliCheck& c);
json to_json(const GBoundCheck& c);
json to_json(const CoareaCheck& c);

/// Non-finite numbers are written as the strings "inf", "-inf" and "nan".
json number(double x);

} // namespace robin
