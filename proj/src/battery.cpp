#include "tbsample/battery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tbsample/analysis.hpp"
#include "tbsample/csv.hpp"
#include "tbsample/encoders.hpp"
#include "tbsample/generate.hpp"
#include "tbsample/integral.hpp"
#include "tbsample/norms.hpp"
#include "tbsample/reconstruct.hpp"
#include "tbsample/report.hpp"

namespace tbs {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr double kThetas[3] = {0.1, 0.5, 1.0};

std::string describe_signal(const HybridSignal& f) {
  std::string s =
      "{t_start=" + format_number(f.t_start) + " dt=" + format_number(f.dt) + " samples=[";
  for (std::size_t i = 0; i < f.samples.size(); ++i) {
    if (i) s += ",";
    s += format_number(f.samples[i]);
  }
  s += "] impulses=[";
  for (std::size_t j = 0; j < f.impulses.size(); ++j) {
    if (j) s += ",";
    s += "(" + format_number(f.impulses[j].time) + "," + format_number(f.impulses[j].weight) + ")";
  }
  return s + "]}";
}

HybridSignal corpus_hybrid(Rng& rng, int trial, double theta) {
  return random_hybrid(rng, 200, 0.01, static_cast<std::size_t>(trial % 4), 4.0, theta);
}

HybridSignal signal_sum(const HybridSignal& f, const HybridSignal& g) {
  HybridSignal h = f;
  for (std::size_t i = 0; i < h.samples.size(); ++i) h.samples[i] += g.samples[i];
  for (const Impulse& im : g.impulses) h.impulses.push_back(im);
  std::sort(h.impulses.begin(), h.impulses.end(),
            [](const Impulse& a, const Impulse& b) { return a.time < b.time; });
  std::vector<Impulse> merged;
  for (const Impulse& im : h.impulses) {
    if (!merged.empty() && merged.back().time == im.time)
      merged.back().weight += im.weight;
    else
      merged.push_back(im);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Impulse& im) { return im.weight == 0.0; }),
               merged.end());
  h.impulses = std::move(merged);
  return h;
}

SpikeTrain random_train(Rng& rng, double theta, std::size_t max_len) {
  SpikeTrain s;
  s.theta = theta;
  const auto len = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(max_len)));
  double t = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    t += 0.01 * static_cast<double>(rng.integer(1, 20));
    const auto mult = static_cast<double>(rng.integer(1, 3));
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    s.spikes.push_back({t, theta * (sign * mult)});
  }
  return s;
}

std::vector<double> geometric_grid(double lo, double hi, int k) {
  std::vector<double> g(static_cast<std::size_t>(k));
  const double r = std::pow(hi / lo, 1.0 / static_cast<double>(k - 1));
  double u = lo;
  for (int i = 0; i < k; ++i) {
    g[static_cast<std::size_t>(i)] = u;
    u *= r;
  }
  g.back() = hi;
  return g;
}

// ---- shared property bodies (acceptance uses full counts, verify scales) ----

PropertyResult prop_quantization_bound(std::uint64_t seed, int trials) {
  Rng rng(seed ^ 0x101u);
  double max_ratio = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const double theta = kThetas[trial % 3];
    const HybridSignal f = corpus_hybrid(rng, trial, theta);
    const BoundCheck bc = check_quantization_bound(f, theta);
    max_ratio = std::fmax(max_ratio, bc.distance / theta);
    if (!bc.holds)
      return {"quantization_bound", false,
              "trial " + std::to_string(trial) + " theta=" + format_number(theta) +
                  " distance=" + format_number(bc.distance) + " " + describe_signal(f)};
  }
  return {"quantization_bound", true,
          std::to_string(trials) + " trials, max distance/theta = " + format_number(max_ratio)};
}

PropertyResult prop_identity(std::uint64_t seed, int trials) {
  Rng rng(seed ^ 0x101u);  // same corpus as the bound property
  std::size_t spikes = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const double theta = kThetas[trial % 3];
    const HybridSignal f = corpus_hybrid(rng, trial, theta);
    EncoderConfig cfg;
    cfg.theta = theta;
    const SpikeTrain via_if = if_encode(f, cfg);
    const SpikeTrain via_sod = sod_of_integral(f, theta);
    if (!trains_equal(via_sod, via_if))
      return {"sod_if_identity", false,
              "trial " + std::to_string(trial) + " theta=" + format_number(theta) + " " +
                  describe_signal(f)};
    spikes += via_if.size();
  }
  return {"sod_if_identity", true,
          std::to_string(trials) + " trials, " + std::to_string(spikes) + " spikes compared"};
}

PropertyResult prop_quasi_isometry(std::uint64_t seed, int trials) {
  Rng rng(seed ^ 0x303u);
  double max_gap = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const double theta = kThetas[trial % 3];
    const HybridSignal f = corpus_hybrid(rng, trial, theta);
    const HybridSignal g = corpus_hybrid(rng, trial + 3, theta);
    const QuasiIsometryCheck qc = check_quasi_isometry(f, g, theta);
    max_gap = std::fmax(max_gap, std::fabs(qc.lhs - qc.rhs) / theta);
    if (!qc.holds)
      return {"quasi_isometry", false,
              "trial " + std::to_string(trial) + " theta=" + format_number(theta) +
                  " lhs=" + format_number(qc.lhs) + " rhs=" + format_number(qc.rhs)};
  }
  return {"quasi_isometry", true,
          std::to_string(trials) + " trials, max |lhs-rhs|/theta = " + format_number(max_gap)};
}

PropertyResult prop_reconstruction(std::uint64_t seed, int trials) {
  Rng rng(seed ^ 0x404u);
  double worst_step = 0.0, worst_pwl = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const double theta = kThetas[trial % 3];
    const HybridSignal g = random_continuous(rng, 200, 0.01, 4.0);
    const SpikeTrain s = sod_encode(g, theta);
    const StepFunction x = sod_step_reconstruct(s, g.t_end, g.t_start);
    const double err_step = sup_distance(g, x);
    const PiecewiseLinear pw = sod_pwl_reconstruct(s, g.t_end, g.t_start);
    double err_pwl = 0.0;
    for (std::size_t i = 1; i <= g.size(); ++i)
      err_pwl = std::fmax(err_pwl, std::fabs(g.samples[i - 1] - pw(g.edge(i))));
    worst_step = std::fmax(worst_step, err_step / theta);
    worst_pwl = std::fmax(worst_pwl, err_pwl / theta);
    if (!(err_step < theta) || !(err_pwl < 2.0 * theta))
      return {"reconstruction_bounds", false,
              "trial " + std::to_string(trial) + " theta=" + format_number(theta) +
                  " step_err=" + format_number(err_step) + " pwl_err=" + format_number(err_pwl) +
                  " " + describe_signal(g)};
  }
  return {"reconstruction_bounds", true,
          std::to_string(trials) + " trials, worst step/theta = " + format_number(worst_step) +
              ", worst pwl/theta = " + format_number(worst_pwl)};
}

PropertyResult prop_round_trip(std::uint64_t seed, int trials) {
  Rng rng(seed ^ 0x505u);
  double worst_gap = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const double theta = kThetas[trial % 3];
    const HybridSignal f = corpus_hybrid(rng, trial, theta);
    EncoderConfig cfg;
    cfg.theta = theta;
    const SpikeTrain z = if_encode(f, cfg);
    const HybridSignal ft = if_mod_reconstruct(z, grid_of(f));
    if (!trains_equal(if_encode(ft, cfg), z))
      return {"mod_round_trip", false,
              "trial " + std::to_string(trial) + " theta=" + format_number(theta) +
                  " re-encode mismatch " + describe_signal(f)};
    const IntegralFunction a = accumulate(ft);
    const PiecewiseLinear pw = sod_pwl_reconstruct(z, f.t_end, f.t_start);
    double gap = 0.0;
    for (std::size_t i = 0; i <= f.size(); ++i)
      gap = std::fmax(gap, std::fabs(a.edge_values()[i] - pw(f.edge(i))));
    worst_gap = std::fmax(worst_gap, gap);
    if (!(gap <= 1e-9))
      return {"mod_round_trip", false,
              "trial " + std::to_string(trial) + " theta=" + format_number(theta) +
                  " integral gap=" + format_number(gap) + " " + describe_signal(f)};
  }
  return {"mod_round_trip", true,
          std::to_string(trials) + " trials, worst integral gap = " + format_number(worst_gap)};
}

PropertyResult prop_oracle(std::uint64_t seed, int trials) {
  Rng rng(seed ^ 0x606u);
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    const double theta = kThetas[trial % 3];
    if (trial % 2 == 0) {
      std::vector<double> samples(n);
      for (double& v : samples) v = rng.uniform(-1.9 * theta, 1.9 * theta);
      const HybridSignal g = make_signal(0.0, 0.5, samples);
      const SparsityResult r = sparsity_oracle(g, theta, SparsityMode::SupNormSOD, 3);
      const double enc = l1_norm(sod_encode(g, theta));
      if (!r.feasible || std::fabs(r.min_l1 - enc) > 1e-12 * std::fmax(1.0, enc))
        return {"oracle_minimality", false,
                "trial " + std::to_string(trial) + " sod oracle=" + format_number(r.min_l1) +
                    " encoder=" + format_number(enc) + " " + describe_signal(g)};
    } else {
      const HybridSignal f = oracle_instance(rng, n, theta, trial % 4 == 1);
      const SparsityResult r = sparsity_oracle(f, theta, SparsityMode::AlexIF, 3);
      EncoderConfig cfg;
      cfg.theta = theta;
      const double enc = l1_norm(if_encode(f, cfg));
      if (!r.feasible || std::fabs(r.min_l1 - enc) > 1e-12 * std::fmax(1.0, enc))
        return {"oracle_minimality", false,
                "trial " + std::to_string(trial) + " if oracle=" + format_number(r.min_l1) +
                    " encoder=" + format_number(enc) + " " + describe_signal(f)};
    }
  }
  return {"oracle_minimality", true, std::to_string(trials) + " exhaustive instances matched"};
}

PropertyResult prop_norm_axioms(std::uint64_t seed, int train_pairs, int signal_pairs) {
  Rng rng(seed ^ 0x707u);
  for (int trial = 0; trial < train_pairs; ++trial) {
    const double theta = kThetas[trial % 3];
    const SpikeTrain a = random_train(rng, theta, 20);
    const SpikeTrain b = random_train(rng, theta, 20);
    const SpikeTrain sum = train_difference(a, train_scale(b, -1.0));
    const double na = alexiewicz_norm_spikes(a);
    const double nb = alexiewicz_norm_spikes(b);
    const double ns = alexiewicz_norm_spikes(sum);
    if (ns > na + nb + 1e-12 * std::fmax(1.0, na + nb))
      return {"norm_axioms", false,
              "train triangle violated: " + format_number(ns) + " > " + format_number(na) + " + " +
                  format_number(nb)};
    const int k = static_cast<int>(rng.integer(-3, 3));
    const double c = std::ldexp(rng.uniform() < 0.5 ? -1.0 : 1.0, k);
    if (!a.empty()) {
      if (alexiewicz_norm_spikes(train_scale(a, c)) != std::fabs(c) * na)
        return {"norm_axioms", false, "homogeneity violated at c=" + format_number(c)};
      if (!(na > 0.0)) return {"norm_axioms", false, "zero norm for a non-empty train"};
    }
  }
  for (int trial = 0; trial < signal_pairs; ++trial) {
    Rng pair_rng(seed ^ (0x800u + static_cast<std::uint64_t>(trial)));
    const HybridSignal f =
        random_hybrid(pair_rng, 100, 0.01, static_cast<std::size_t>(trial % 3), 3.0, 0.5);
    const HybridSignal g =
        random_hybrid(pair_rng, 100, 0.01, static_cast<std::size_t>((trial + 2) % 3), 3.0, 0.5);
    const double nf = alexiewicz_norm_signal(f);
    const double ng = alexiewicz_norm_signal(g);
    const double nsum = alexiewicz_norm_signal(signal_sum(f, g));
    if (nsum > nf + ng + 1e-12 * std::fmax(1.0, nf + ng))
      return {"norm_axioms", false,
              "signal triangle violated: " + format_number(nsum) + " > " + format_number(nf) +
                  " + " + format_number(ng)};
  }
  return {"norm_axioms", true,
          std::to_string(train_pairs) + " train pairs, " + std::to_string(signal_pairs) +
              " signal pairs"};
}

// ---- acceptance-only bodies ----

CriterionResult crit_fixed_point(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Rng rng(seed ^ 0x909u);
  const int kTrials = 50;
  const std::size_t n = 12800;
  for (int trial = 0; trial < kTrials; ++trial) {
    HybridSignal g;
    g.t_start = 0.0;
    g.dt = 0.01;
    g.samples.resize(n);
    double acc = 0.0;
    for (double& v : g.samples) {
      acc += 0.05 * rng.gauss();
      v = acc;
    }
    g.t_end = g.edge(n);
    const std::vector<double> grid = geometric_grid(0.1, 0.4, 5);
    const RegularizationResult rs = regularization_sweep(g, 0.002, grid);
    if (!rs.fixed_point_found || rs.degenerate || !rs.l1_nonincreasing ||
        !(rs.final_width <= 1e-6 * rs.initial_width))
      return {6, "fixed-point", false,
              "sod trial " + std::to_string(trial) + ": found=" +
                  std::to_string(rs.fixed_point_found) + " l1_mono=" +
                  std::to_string(rs.l1_nonincreasing) + " width=" + format_number(rs.final_width),
              seconds_since(t0)};
    HybridSignal f;
    f.t_start = 0.0;
    f.dt = 0.01;
    f.samples.resize(n);
    for (double& v : f.samples) v = 5.0 * rng.gauss();
    f.t_end = f.edge(n);
    const RegularizationResult ri = if_regularization_sweep(f, 0.002, grid);
    if (!ri.fixed_point_found || ri.degenerate || !ri.l1_nonincreasing ||
        !(ri.final_width <= 1e-6 * ri.initial_width))
      return {6, "fixed-point", false,
              "if trial " + std::to_string(trial) + ": found=" +
                  std::to_string(ri.fixed_point_found) + " l1_mono=" +
                  std::to_string(ri.l1_nonincreasing) + " width=" + format_number(ri.final_width),
              seconds_since(t0)};
  }
  return {6, "fixed-point", true,
          std::to_string(kTrials) + " signals x 2 variants: sign change bracketed, "
          "bisection converged, l1 curve nonincreasing",
          seconds_since(t0)};
}

CriterionResult crit_threshold_sweep(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Rng rng(seed ^ 0xa0au);
  const std::size_t n = 600;
  const double dt = 0.01;

  HybridSignal f;
  f.t_start = 0.0;
  f.dt = dt;
  f.samples = accel_like_samples(rng, n, dt, 1.0);
  f.t_end = f.edge(n);
  const double a0 = alexiewicz_norm_signal(f);
  for (double& v : f.samples) v *= 5.0 / a0;  // ||A(f)|| ~= 5
  f.impulses.push_back({f.edge(n / 2), 0.5});

  std::vector<double> thetas(50);
  for (std::size_t i = 0; i < 50; ++i)
    thetas[i] = 0.01 + (0.5 - 0.01) * static_cast<double>(i) / 49.0;
  const SweepResult sw = threshold_sweep(f, thetas);

  for (std::size_t i = 0; i < 50; ++i)
    if (!(sw.max_err_mod[i] <= 2.0 * thetas[i] + 1e-9))
      return {7, "threshold-sweep", false,
              "mod error " + format_number(sw.max_err_mod[i]) + " above 2*theta at theta=" +
                  format_number(thetas[i]),
              seconds_since(t0)};
  double sub_min = sw.max_err_sub[0];
  std::size_t arg = 0;
  for (std::size_t i = 1; i < 50; ++i)
    if (sw.max_err_sub[i] < sub_min) {
      sub_min = sw.max_err_sub[i];
      arg = i;
    }
  if (!(sub_min >= 0.15))
    return {7, "threshold-sweep", false,
            "sub error floor " + format_number(sub_min) + " below 0.15", seconds_since(t0)};
  if (arg == 0 || arg == 49)
    return {7, "threshold-sweep", false,
            "sub minimizer theta=" + format_number(sw.theta_star) + " sits on the sweep boundary",
            seconds_since(t0)};

  const HybridSignal slow = slow_signal(rng, n, dt, thetas.front());
  const SweepResult sw2 = threshold_sweep(slow, thetas);
  for (std::size_t i = 0; i < 50; ++i)
    if (sw2.max_err_mod[i] != sw2.max_err_sub[i] ||
        sw2.spike_count_mod[i] != sw2.spike_count_sub[i])
      return {7, "threshold-sweep", false,
              "slow signal: mod and sub curves differ at theta=" + format_number(thetas[i]),
              seconds_since(t0)};
  return {7, "threshold-sweep", true,
          "mod within 2*theta, sub floor " + format_number(sub_min) + " with interior minimum at "
          "theta=" + format_number(sw.theta_star) + ", slow-signal curves identical",
          seconds_since(t0)};
}

CriterionResult crit_regularization(std::uint64_t seed, const std::string& artifacts_dir) {
  const auto t0 = Clock::now();
  Rng rng(seed ^ 0xb0bu);
  const std::size_t n = 800;
  const double dt = 0.01;
  HybridSignal base;
  base.t_start = 0.0;
  base.dt = dt;
  base.samples = accel_like_samples(rng, n, dt, 10.0);
  base.t_end = base.edge(n);
  double dstep = 0.0;
  for (double v : base.samples) dstep = std::fmax(dstep, std::fabs(v) * dt);

  const IntegralFunction a = accumulate(base);
  HybridSignal g;
  g.t_start = 0.0;
  g.dt = dt;
  g.samples.assign(a.edge_values().begin() + 1, a.edge_values().end());
  g.t_end = g.edge(n);
  const auto [mn_it, mx_it] = std::minmax_element(g.samples.begin(), g.samples.end());
  const double range = *mx_it - *mn_it;

  const std::vector<double> grid = geometric_grid(0.03 * range, 0.3 * range, 10);
  const RegularizationResult r = regularization_sweep(g, 0.002, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(std::fabs(r.alpha[i] - r.u_grid[i]) <= dstep + 1e-12))
      return {8, "regularization", false,
              "alpha gap " + format_number(std::fabs(r.alpha[i] - r.u_grid[i])) +
                  " above step bound " + format_number(dstep) + " at u=" +
                  format_number(r.u_grid[i]),
              seconds_since(t0)};
    if (i > 0 && !(r.beta[i] <= r.beta[i - 1] + 1e-12 * std::fmax(1.0, r.beta[i - 1])))
      return {8, "regularization", false,
              "beta increases at u=" + format_number(r.u_grid[i]), seconds_since(t0)};
  }

  const SweepResult sw = threshold_sweep(g, grid);
  nlohmann::json config{{"kind", "regularization"}, {"lambda", 0.002},
                        {"n", n},                   {"dt", dt},
                        {"seed", seed}};
  nlohmann::json properties{{"alpha_step_bound", dstep},
                            {"beta_nonincreasing", true},
                            {"fixed_point_found", r.fixed_point_found}};
  nlohmann::json fixed_point = nlohmann::json::array({reg_to_json(r, "sod")});
  const nlohmann::json report = make_report(config, sw, fixed_point, properties);
  std::string why;
  if (!validate_report(report, why))
    return {8, "regularization", false, "report validation: " + why, seconds_since(t0)};
  const std::string json_path = artifacts_dir + "/regularization_report.json";
  const std::string csv_path = artifacts_dir + "/regularization_curves.csv";
  write_json(json_path, report);
  {
    std::string csv = "u,alpha,beta,l1,objective\n";
    for (std::size_t i = 0; i < r.u_grid.size(); ++i)
      csv += format_number(r.u_grid[i]) + "," + format_number(r.alpha[i]) + "," +
             format_number(r.beta[i]) + "," + format_number(r.l1[i]) + "," +
             format_number(r.objective[i]) + "\n";
    std::FILE* fp = std::fopen(csv_path.c_str(), "w");
    if (!fp) return {8, "regularization", false, "cannot write " + csv_path, seconds_since(t0)};
    std::fwrite(csv.data(), 1, csv.size(), fp);
    std::fclose(fp);
  }
  return {8, "regularization", true,
          "alpha tracks u within " + format_number(dstep) + ", beta nonincreasing, report at " +
              json_path,
          seconds_since(t0)};
}

CriterionResult wrap(int index, const std::string& name, const PropertyResult& p, double secs,
                     bool in_budget = true, const std::string& budget_note = "") {
  CriterionResult c{index, name, p.pass && in_budget, p.detail, secs};
  if (!in_budget) c.detail += budget_note;
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::string& artifacts_dir) {
  std::vector<CriterionResult> out;

  {
    const auto t0 = Clock::now();
    const PropertyResult p = prop_quantization_bound(seed, 1000);
    const double secs = seconds_since(t0);
    out.push_back(wrap(1, "quantization-bound", p, secs, secs < 10.0,
                       " [exceeded the 10 s budget]"));
  }
  {
    const auto t0 = Clock::now();
    const PropertyResult p = prop_identity(seed, 1000);
    out.push_back(wrap(2, "sod-if-identity", p, seconds_since(t0)));
  }
  {
    const auto t0 = Clock::now();
    const PropertyResult p = prop_quasi_isometry(seed, 500);
    out.push_back(wrap(3, "quasi-isometry", p, seconds_since(t0)));
  }
  {
    const auto t0 = Clock::now();
    PropertyResult p = prop_reconstruction(seed, 500);
    if (p.pass) {
      const PropertyResult q = prop_round_trip(seed, 500);
      if (!q.pass) p = q;
      else p.detail += "; " + q.detail;
    }
    out.push_back(wrap(4, "reconstruction", p, seconds_since(t0)));
  }
  {
    const auto t0 = Clock::now();
    const PropertyResult p = prop_oracle(seed, 200);
    const double secs = seconds_since(t0);
    out.push_back(wrap(5, "sparsity-oracle", p, secs, secs < 60.0,
                       " [exceeded the 60 s budget]"));
  }
  out.push_back(crit_fixed_point(seed));
  out.push_back(crit_threshold_sweep(seed));
  out.push_back(crit_regularization(seed, artifacts_dir));
  {
    const auto t0 = Clock::now();
    const PropertyResult p = prop_norm_axioms(seed, 1000, 500);
    out.push_back(wrap(9, "norm-axioms", p, seconds_since(t0)));
  }
  return out;
}

std::vector<PropertyResult> run_battery(std::uint64_t seed, int trials) {
  std::vector<PropertyResult> out;
  out.push_back(prop_quantization_bound(seed, trials));
  out.push_back(prop_identity(seed, trials));
  out.push_back(prop_quasi_isometry(seed, trials));
  out.push_back(prop_reconstruction(seed, trials));
  out.push_back(prop_round_trip(seed, trials));
  out.push_back(prop_oracle(seed, std::min(trials, 100)));
  out.push_back(prop_norm_axioms(seed, trials, std::max(1, trials / 2)));
  return out;
}

}  // namespace tbs
