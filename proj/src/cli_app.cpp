#include "tbsample/cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tbsample/analysis.hpp"
#include "tbsample/battery.hpp"
#include "tbsample/encoders.hpp"
#include "tbsample/generate.hpp"
#include "tbsample/integral.hpp"
#include "tbsample/norms.hpp"
#include "tbsample/reconstruct.hpp"
#include "tbsample/report.hpp"

namespace tbs {
namespace {

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
  return out;
}

}  // namespace

int cmd_encode(const EncodeArgs& a) {
  const HybridSignal f = read_signal_csv(a.input);
  EncoderConfig cfg;
  if (!(a.theta > 0.0)) throw std::invalid_argument("encode: theta must be positive");
  cfg.theta = a.theta;
  cfg.reset = a.reset;
  cfg.event_time_policy = a.policy;
  const SpikeTrain s = if_encode(f, cfg);
  write_spikes_csv(a.out_path, s);
  std::cout << s.size() << " spikes -> " << a.out_path << "\n";
  return 0;
}

int cmd_reconstruct(const ReconstructArgs& a) {
  if (!(a.theta > 0.0)) throw std::invalid_argument("reconstruct: theta must be positive");
  if (!(a.grid_dt > 0.0)) throw std::invalid_argument("reconstruct: grid_dt must be positive");
  const SpikeTrain s = read_spikes_csv(a.spikes_path, a.theta);
  double t_end = a.t_end;
  if (t_end < a.t_start) t_end = s.empty() ? a.t_start : s.spikes.back().time;
  SignalGrid grid;
  grid.t_start = a.t_start;
  grid.dt = a.grid_dt;
  grid.n = static_cast<std::size_t>(
      std::ceil((t_end - a.t_start) / a.grid_dt - 1e-9));

  std::ofstream out(a.out_path);
  if (!out) throw parse_error(a.out_path + ": cannot write");
  out << "t,value\n";
  if (a.kind == "sod-step") {
    const StepFunction x = sod_step_reconstruct(s, grid.t_end(), a.t_start);
    for (std::size_t i = 1; i <= grid.n; ++i)
      out << format_number(grid.edge(i)) << "," << format_number(x(grid.edge(i))) << "\n";
  } else if (a.kind == "sod-pwl") {
    const PiecewiseLinear g = sod_pwl_reconstruct(s, grid.t_end(), a.t_start);
    for (std::size_t i = 1; i <= grid.n; ++i)
      out << format_number(grid.edge(i)) << "," << format_number(g(grid.edge(i))) << "\n";
  } else if (a.kind == "if-mod" || a.kind == "if-sub") {
    const HybridSignal f = a.kind == "if-mod" ? if_mod_reconstruct(s, grid)
                                              : if_sub_reconstruct(s, grid);
    for (std::size_t i = 1; i <= grid.n; ++i)
      out << format_number(f.edge(i)) << "," << format_number(f.samples[i - 1]) << "\n";
    if (!f.impulses.empty()) {
      out << "#impulses\n";
      for (const Impulse& im : f.impulses)
        out << format_number(im.time) << "," << format_number(im.weight) << "\n";
    }
  } else {
    throw std::invalid_argument("reconstruct: unknown kind " + a.kind);
  }
  return 0;
}

int cmd_sweep(const SweepArgs& a) {
  if (!(a.theta_min > 0.0) || !(a.theta_max > a.theta_min))
    throw std::invalid_argument("sweep: need 0 < theta_min < theta_max");
  if (a.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  const HybridSignal f = read_signal_csv(a.input);
  const std::vector<double> thetas = linspace(a.theta_min, a.theta_max, a.steps);
  const SweepResult sw = threshold_sweep(f, thetas);

  nlohmann::json fixed_point = nlohmann::json::array();
  const RegularizationResult rif = if_regularization_sweep(f, a.lambda, thetas);
  fixed_point.push_back(reg_to_json(rif, "if"));
  if (f.impulses.empty()) {
    const RegularizationResult rsod = regularization_sweep(f, a.lambda, thetas);
    fixed_point.push_back(reg_to_json(rsod, "sod"));
  }

  double max_ratio = 0.0;
  bool bound_all = true;
  bool identity_all = true;
  for (double theta : thetas) {
    const BoundCheck bc = check_quantization_bound(f, theta);
    max_ratio = std::fmax(max_ratio, bc.distance / theta);
    bound_all = bound_all && bc.holds;
    EncoderConfig cfg;
    cfg.theta = theta;
    identity_all = identity_all && trains_equal(sod_of_integral(f, theta), if_encode(f, cfg));
  }
  nlohmann::json properties{{"quantization_bound_holds", bound_all},
                            {"max_distance_ratio", max_ratio},
                            {"sod_if_identity", identity_all}};
  nlohmann::json config{{"input", a.input.path},
                        {"rate_hz", a.input.rate_hz},
                        {"impulses", a.input.impulses_path ? *a.input.impulses_path : ""},
                        {"theta_min", a.theta_min},
                        {"theta_max", a.theta_max},
                        {"steps", a.steps},
                        {"lambda", a.lambda}};
  const nlohmann::json report = make_report(config, sw, fixed_point, properties);
  std::string why;
  if (!validate_report(report, why)) throw std::runtime_error("report failed validation: " + why);
  write_json(a.out_json, report);

  std::printf("%14s %14s %14s %10s %10s\n", "theta", "max_err_mod", "max_err_sub", "n_mod",
              "n_sub");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    std::printf("%14.6g %14.6g %14.6g %10zu %10zu\n", sw.thresholds[i], sw.max_err_mod[i],
                sw.max_err_sub[i], sw.spike_count_mod[i], sw.spike_count_sub[i]);
  }
  std::printf("theta_star = %.6g\n", sw.theta_star);
  return 0;
}

int cmd_verify(const VerifyArgs& a) {
  if (a.trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
  const std::vector<PropertyResult> results = run_battery(a.seed, a.trials);
  bool all = true;
  for (const PropertyResult& r : results) {
    std::printf("%s %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.empty() ? "" : " ", r.detail.c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

int cmd_generate(const GenerateArgs& a) {
  Rng rng(a.seed);
  HybridSignal f;
  f.t_start = 0.0;
  f.dt = a.dt;
  bool sidecar = false;
  if (a.kind == "accel-like") {
    f.samples = accel_like_samples(rng, a.n, a.dt, 1.0);
  } else if (a.kind == "ramp") {
    f.samples.resize(a.n);
    for (std::size_t i = 1; i <= a.n; ++i) f.samples[i - 1] = f.edge(i);
  } else if (a.kind == "impulse-train") {
    f.samples.assign(a.n, 0.0);
    sidecar = true;
  } else if (a.kind == "mixed") {
    f.samples = accel_like_samples(rng, a.n, a.dt, 1.0);
    sidecar = true;
  } else {
    throw std::invalid_argument("generate: unknown kind " + a.kind);
  }
  f.t_end = f.edge(a.n);
  if (sidecar && a.n >= 4) {
    const std::size_t count = 2 + static_cast<std::size_t>(rng.integer(0, 1));
    std::vector<std::size_t> slots;
    while (slots.size() < count) {
      const auto j = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(a.n) - 1));
      if (std::find(slots.begin(), slots.end(), j) == slots.end()) slots.push_back(j);
    }
    std::sort(slots.begin(), slots.end());
    for (std::size_t j : slots)
      f.impulses.push_back({f.edge(j), rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0)});
  }
  f.validate();
  write_signal_csv(a.out_path, f);
  if (sidecar) write_impulses_csv(a.out_path + ".impulses.csv", f);
  std::cout << a.n << " samples -> " << a.out_path << "\n";
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"threshold-based sampling: integrate-and-fire / send-on-delta toolkit"};
  app.require_subcommand(1);

  EncodeArgs ea;
  std::string reset = "mod";
  bool subsample = false;
  double rate = 0.0;
  std::string impulses;
  CLI::App* enc = app.add_subcommand("encode", "encode a signal CSV into a spike train");
  enc->add_option("input", ea.input.path, "signal CSV")->required();
  enc->add_option("--theta", ea.theta, "threshold")->required();
  enc->add_option("--reset", reset, "reset variant")->check(CLI::IsMember({"mod", "sub"}));
  enc->add_option("--rate", rate, "sampling rate (Hz) for one-column input");
  enc->add_option("--impulses", impulses, "impulse CSV (t,weight)");
  enc->add_flag("--subsample-times", subsample, "exact crossing times inside intervals");
  enc->add_option("--out", ea.out_path, "output spike CSV")->required();

  ReconstructArgs ra;
  CLI::App* rec = app.add_subcommand("reconstruct", "reconstruct a signal from a spike CSV");
  rec->add_option("spikes", ra.spikes_path, "spike CSV")->required();
  rec->add_option("--theta", ra.theta, "threshold")->required();
  rec->add_option("--kind", ra.kind, "reconstruction kind")
      ->required()
      ->check(CLI::IsMember({"sod-step", "sod-pwl", "if-mod", "if-sub"}));
  rec->add_option("--grid-dt", ra.grid_dt, "output grid spacing")->required();
  rec->add_option("--t-start", ra.t_start, "grid start (default 0)");
  rec->add_option("--t-end", ra.t_end, "grid end (default: last spike)");
  rec->add_option("--out", ra.out_path, "output CSV")->required();

  SweepArgs sa;
  double s_rate = 0.0;
  std::string s_impulses;
  CLI::App* swp = app.add_subcommand("sweep", "threshold sweep with error curves and fixed points");
  swp->add_option("input", sa.input.path, "signal CSV")->required();
  swp->add_option("--theta-min", sa.theta_min, "lowest threshold")->required();
  swp->add_option("--theta-max", sa.theta_max, "highest threshold")->required();
  swp->add_option("--steps", sa.steps, "number of thresholds")->required();
  swp->add_option("--lambda", sa.lambda, "regularization weight (default 0.002)");
  swp->add_option("--rate", s_rate, "sampling rate (Hz) for one-column input");
  swp->add_option("--impulses", s_impulses, "impulse CSV (t,weight)");
  swp->add_option("--out", sa.out_json, "output report JSON")->required();

  VerifyArgs va;
  CLI::App* ver = app.add_subcommand("verify", "run the property battery");
  ver->add_option("--seed", va.seed, "RNG seed");
  ver->add_option("--trials", va.trials, "trials per property");

  GenerateArgs ga;
  CLI::App* gen = app.add_subcommand("generate", "write a synthetic signal CSV");
  gen->add_option("--kind", ga.kind, "signal kind")
      ->required()
      ->check(CLI::IsMember({"accel-like", "ramp", "impulse-train", "mixed"}));
  gen->add_option("--n", ga.n, "sample count");
  gen->add_option("--dt", ga.dt, "sampling interval (default 0.01)");
  gen->add_option("--seed", ga.seed, "RNG seed");
  gen->add_option("--out", ga.out_path, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enc->parsed()) {
      ea.reset = reset == "sub" ? ResetMode::Sub : ResetMode::Mod;
      ea.policy = subsample ? EventTimePolicy::SubsampleInterp : EventTimePolicy::GridSnap;
      ea.input.format = rate > 0.0 ? SignalFormat::OneColumnCSV : SignalFormat::TwoColumnCSV;
      ea.input.rate_hz = rate;
      if (!impulses.empty()) ea.input.impulses_path = impulses;
      return cmd_encode(ea);
    }
    if (rec->parsed()) return cmd_reconstruct(ra);
    if (swp->parsed()) {
      sa.input.format = s_rate > 0.0 ? SignalFormat::OneColumnCSV : SignalFormat::TwoColumnCSV;
      sa.input.rate_hz = s_rate;
      if (!s_impulses.empty()) sa.input.impulses_path = s_impulses;
      return cmd_sweep(sa);
    }
    if (ver->parsed()) return cmd_verify(va);
    if (gen->parsed()) return cmd_generate(ga);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tbs
