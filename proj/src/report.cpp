#include "tbsample/report.hpp"

#include <cmath>
#include <fstream>

namespace tbs {

using nlohmann::json;

json sweep_to_json(const SweepResult& r) {
  return json{{"thresholds", r.thresholds},
              {"max_err_mod", r.max_err_mod},
              {"max_err_sub", r.max_err_sub},
              {"spike_count_mod", r.spike_count_mod},
              {"spike_count_sub", r.spike_count_sub},
              {"theta_star", r.theta_star}};
}

json reg_to_json(const RegularizationResult& r, const std::string& variant) {
  return json{{"variant", variant},
              {"lambda", r.lambda},
              {"u_grid", r.u_grid},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"l1", r.l1},
              {"objective", r.objective},
              {"u_min_objective", r.u_min_objective},
              {"u_fixed_point", r.u_fixed_point},
              {"fixed_point_found", r.fixed_point_found},
              {"degenerate", r.degenerate},
              {"bracket", json::array({r.bracket_lo, r.bracket_hi})},
              {"final_width", r.final_width},
              {"alpha_nondecreasing", r.alpha_nondecreasing},
              {"l1_nonincreasing", r.l1_nonincreasing}};
}

json make_report(json config, const SweepResult& sweep, json fixed_point, json properties) {
  return json{{"schema_version", 1},
              {"config", std::move(config)},
              {"sweep", sweep_to_json(sweep)},
              {"fixed_point", std::move(fixed_point)},
              {"properties", std::move(properties)}};
}

namespace {

bool all_finite(const json& j, std::string& why) {
  if (j.is_number_float()) {
    if (!std::isfinite(j.get<double>())) {
      why = "non-finite number";
      return false;
    }
    return true;
  }
  if (j.is_array() || j.is_object()) {
    for (const auto& el : j) {
      if (!all_finite(el, why)) return false;
    }
  }
  return true;
}

}  // namespace

bool validate_report(const json& j, std::string& why) {
  for (const char* key : {"schema_version", "config", "sweep", "fixed_point", "properties"}) {
    if (!j.contains(key)) {
      why = std::string("missing key: ") + key;
      return false;
    }
  }
  if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != 1) {
    why = "schema_version must be 1";
    return false;
  }
  for (const char* key : {"thresholds", "max_err_mod", "max_err_sub", "spike_count_mod",
                          "spike_count_sub", "theta_star"}) {
    if (!j["sweep"].contains(key)) {
      why = std::string("sweep missing key: ") + key;
      return false;
    }
  }
  return all_finite(j, why);
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace tbs
