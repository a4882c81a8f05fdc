#pragma once

#include <cstdint>
#include <string>

#include "tbsample/csv.hpp"
#include "tbsample/types.hpp"

namespace tbs {

struct EncodeArgs {
  SignalFileSpec input;
  double theta = 1.0;
  ResetMode reset = ResetMode::Mod;
  EventTimePolicy policy = EventTimePolicy::GridSnap;
  std::string out_path;
};

struct ReconstructArgs {
  std::string spikes_path;
  double theta = 1.0;
  std::string kind;  // sod-step | sod-pwl | if-mod | if-sub
  double grid_dt = 0.01;
  double t_start = 0.0;
  double t_end = -1.0;  // < t_start: defaults to the last spike time
  std::string out_path;
};

struct SweepArgs {
  SignalFileSpec input;
  double theta_min = 0.0;
  double theta_max = 0.0;
  int steps = 0;
  double lambda = 0.002;
  std::string out_json;
};

struct VerifyArgs {
  std::uint64_t seed = 1;
  int trials = 100;
};

struct GenerateArgs {
  std::string kind;  // accel-like | ramp | impulse-train | mixed
  std::size_t n = 300;
  double dt = 0.01;
  std::uint64_t seed = 1;
  std::string out_path;
};

int cmd_encode(const EncodeArgs& a);
int cmd_reconstruct(const ReconstructArgs& a);
int cmd_sweep(const SweepArgs& a);
int cmd_verify(const VerifyArgs& a);
int cmd_generate(const GenerateArgs& a);

// Full CLI: parses argv, dispatches, maps errors to exit codes (2 = usage or
// input error, 1 = property violation).
int run_cli(int argc, char** argv);

}  // namespace tbs
