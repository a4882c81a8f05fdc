#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tbs {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The nine acceptance criteria at full corpus size. artifacts_dir receives the
// JSON/CSV emitted by the structural-reproduction criterion.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::string& artifacts_dir);

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Seed-deterministic property battery scaled by trials (used by the verify
// command). On failure the detail carries a serialized counterexample.
std::vector<PropertyResult> run_battery(std::uint64_t seed, int trials);

}  // namespace tbs
