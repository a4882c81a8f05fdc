#pragma once

#include <string>

#include "json.hpp"
#include "tbsample/analysis.hpp"

namespace tbs {

nlohmann::json sweep_to_json(const SweepResult& r);
nlohmann::json reg_to_json(const RegularizationResult& r, const std::string& variant);

// Assembles the experiment report: schema_version, config, sweep, fixed_point,
// properties.
nlohmann::json make_report(nlohmann::json config, const SweepResult& sweep,
                           nlohmann::json fixed_point, nlohmann::json properties);

// Checks the report contract (required keys, schema_version == 1, all numeric
// leaves finite). Returns false and fills why on violation.
bool validate_report(const nlohmann::json& j, std::string& why);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace tbs
