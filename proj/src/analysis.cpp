#include "tbsample/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "tbsample/encoders.hpp"
#include "tbsample/integral.hpp"
#include "tbsample/norms.hpp"
#include "tbsample/quantize.hpp"
#include "tbsample/reconstruct.hpp"

namespace tbs {

BoundCheck check_quantization_bound(const HybridSignal& f, double theta, double eps) {
  EncoderConfig cfg;
  cfg.theta = theta;
  cfg.reset = ResetMode::Mod;
  const SpikeTrain s = if_encode(f, cfg);
  BoundCheck r;
  r.distance = alexiewicz_distance(f, s);
  r.holds = r.distance < theta * (1.0 - eps);
  return r;
}

QuasiIsometryCheck check_quasi_isometry(const HybridSignal& f, const HybridSignal& g, double theta) {
  f.validate();
  g.validate();
  if (f.t_start != g.t_start || f.dt != g.dt || f.samples.size() != g.samples.size())
    throw std::invalid_argument("check_quasi_isometry: signals must share the grid");
  EncoderConfig cfg;
  cfg.theta = theta;
  const SpikeTrain sf = if_encode(f, cfg);
  const SpikeTrain sg = if_encode(g, cfg);
  QuasiIsometryCheck r;
  r.lhs = alexiewicz_norm_spikes(train_difference(sg, sf));
  // g - f as a hybrid signal on the shared grid
  HybridSignal d = f;
  for (std::size_t i = 0; i < d.samples.size(); ++i) d.samples[i] = g.samples[i] - f.samples[i];
  std::vector<Impulse> merged;
  std::size_t i = 0, j = 0;
  while (i < g.impulses.size() || j < f.impulses.size()) {
    if (j >= f.impulses.size() ||
        (i < g.impulses.size() && g.impulses[i].time < f.impulses[j].time)) {
      merged.push_back(g.impulses[i]);
      ++i;
    } else if (i >= g.impulses.size() || f.impulses[j].time < g.impulses[i].time) {
      merged.push_back({f.impulses[j].time, -f.impulses[j].weight});
      ++j;
    } else {
      merged.push_back({g.impulses[i].time, g.impulses[i].weight - f.impulses[j].weight});
      ++i;
      ++j;
    }
  }
  d.impulses = std::move(merged);
  // same jump-inclusive instant evaluation as alexiewicz_distance
  double m = 0.0;
  walk_integral(d, [&](double /*t*/, double /*pre*/, double post, bool /*edge*/) {
    m = std::fmax(m, std::fabs(post));
  });
  r.rhs = m;
  r.holds = std::fabs(r.lhs - r.rhs) < 2.0 * theta;
  return r;
}

namespace {

struct OracleSearch {
  const std::vector<double>* target = nullptr;
  double theta = 0.0;
  int mm = 0;
  std::size_t n = 0;
  bool found = false;
  std::int64_t best_l1 = 0;
  bool unique_min = true;
  std::vector<int> cur;
  std::vector<int> best;

  void rec(std::size_t i, std::int64_t level, std::int64_t l1) {
    if (found && l1 > best_l1) return;
    if (i == n) {
      if (!found || l1 < best_l1) {
        found = true;
        best_l1 = l1;
        best = cur;
        unique_min = true;
      } else if (l1 == best_l1) {
        unique_min = false;
      }
      return;
    }
    for (int m = -mm; m <= mm; ++m) {
      const std::int64_t lv = level + m;
      if (std::fabs((*target)[i] - theta * static_cast<double>(lv)) < theta) {
        cur[i] = m;
        rec(i + 1, lv, l1 + std::llabs(m));
      }
    }
  }
};

}  // namespace

SparsityResult sparsity_oracle(const HybridSignal& f, double theta, SparsityMode mode,
                               int max_mult, double cap) {
  f.validate();
  if (!(theta > 0.0)) throw std::invalid_argument("sparsity_oracle: theta must be positive");
  if (max_mult < 0) throw std::invalid_argument("sparsity_oracle: max_mult must be >= 0");
  if (mode == SparsityMode::SupNormSOD && !f.impulses.empty())
    throw std::invalid_argument("sparsity_oracle: sup-norm mode needs an impulse-free signal");
  const std::size_t n = f.samples.size();
  const double space = std::pow(2.0 * max_mult + 1.0, static_cast<double>(n));
  if (space > cap) throw size_limit_error("sparsity_oracle: search space exceeds the cap");

  // per-instant targets the candidate running sum is compared against
  std::vector<double> target(n);
  if (mode == SparsityMode::SupNormSOD) {
    target = f.samples;
  } else {
    const IntegralFunction a = accumulate(f);
    for (std::size_t i = 0; i < n; ++i) target[i] = a.edge_values()[i + 1];
  }

  OracleSearch s;
  s.target = &target;
  s.theta = theta;
  s.mm = max_mult;
  s.n = n;
  s.cur.assign(n, 0);
  s.rec(0, 0, 0);

  SparsityResult r;
  r.feasible = s.found;
  r.unique = s.unique_min;
  r.witness.theta = theta;
  if (!s.found) {
    r.min_l1 = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s.best[i] != 0)
      r.witness.spikes.push_back({f.edge(i + 1), theta * static_cast<double>(s.best[i])});
  }
  r.min_l1 = l1_norm(r.witness);
  return r;
}

namespace {

void check_u_grid(const std::vector<double>& u_grid) {
  if (u_grid.empty()) throw std::invalid_argument("sweep: empty u grid");
  double prev = 0.0;
  for (double u : u_grid) {
    if (!(u > prev)) throw std::invalid_argument("sweep: u grid must be positive increasing");
    prev = u;
  }
}

// Locates the sign change of h(u) = u - ell(u) by bisection. ell is
// nonincreasing on the corpora this is used with, so h is nondecreasing and
// the bracket keeps the root.
template <class Ell>
void solve_fixed_point(RegularizationResult& r, double lo, double hi, Ell&& ell) {
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.initial_width = hi - lo;
  double h_lo = lo - ell(lo);
  double h_hi = hi - ell(hi);
  if (!(h_lo < 0.0) || !(h_hi > 0.0)) {
    r.degenerate = true;
    r.fixed_point_found = false;
    r.u_fixed_point = lo;
    r.final_width = r.initial_width;
    return;
  }
  double a = lo, b = hi;
  for (int it = 0; it < 60 && (b - a) > 1e-6 * r.initial_width; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid - ell(mid) < 0.0)
      a = mid;
    else
      b = mid;
  }
  r.final_width = b - a;
  r.u_fixed_point = 0.5 * (a + b);
  r.fixed_point_found = true;
}

void finish_sweep(RegularizationResult& r) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < r.objective.size(); ++i) {
    if (r.objective[i] < r.objective[arg]) arg = i;
  }
  r.u_min_objective = r.u_grid[arg];
  for (std::size_t i = 1; i < r.u_grid.size(); ++i) {
    if (r.alpha[i] < r.alpha[i - 1] - 1e-12 * std::fmax(1.0, r.alpha[i - 1]))
      r.alpha_nondecreasing = false;
    if (r.l1[i] > r.l1[i - 1] + 1e-12 * std::fmax(1.0, r.l1[i - 1]))
      r.l1_nonincreasing = false;
  }
}

}  // namespace

RegularizationResult regularization_sweep(const HybridSignal& f, double lambda,
                                          const std::vector<double>& u_grid) {
  f.validate();
  if (!f.impulses.empty())
    throw std::invalid_argument("regularization_sweep: impulse-free signal required");
  check_u_grid(u_grid);
  RegularizationResult r;
  r.lambda = lambda;
  r.u_grid = u_grid;
  const double t_end = f.edge(f.samples.size());
  for (double u : u_grid) {
    const SpikeTrain s = sod_encode(f, u);
    const StepFunction chi = sod_step_reconstruct(s, t_end, f.t_start);
    const double a = sup_distance(f, chi);
    const double l1 = l1_norm(s);
    const double b = tv_norm(chi) / u;
    r.alpha.push_back(a);
    r.l1.push_back(l1);
    r.beta.push_back(b);
    r.objective.push_back(a + lambda * b);
  }
  finish_sweep(r);
  double scale = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  for (double v : f.samples) {
    scale = std::fmax(scale, std::fabs(v));
    min_abs = std::fmin(min_abs, std::fabs(v));
  }
  if (scale == 0.0) {
    solve_fixed_point(r, 1e-12, 1.0, [](double) { return 0.0; });
    return r;
  }
  const double lo = std::fmax(f.dt * min_abs, 1e-9 * scale);
  const double hi = 2.2 * scale;
  solve_fixed_point(r, lo, hi, [&](double u) { return l1_norm(sod_encode(f, u)); });
  return r;
}

RegularizationResult if_regularization_sweep(const HybridSignal& f, double lambda,
                                             const std::vector<double>& u_grid) {
  f.validate();
  check_u_grid(u_grid);
  RegularizationResult r;
  r.lambda = lambda;
  r.u_grid = u_grid;
  for (double u : u_grid) {
    EncoderConfig cfg;
    cfg.theta = u;
    const SpikeTrain s = if_encode(f, cfg);
    const double a = alexiewicz_distance(f, s);
    const double l1 = l1_norm(s);
    r.alpha.push_back(a);
    r.l1.push_back(l1);
    r.beta.push_back(l1 / u);
    r.objective.push_back(a + lambda * (l1 / u));
  }
  finish_sweep(r);
  const double scale = alexiewicz_norm_signal(f);
  if (scale == 0.0) {
    solve_fixed_point(r, 1e-12, 1.0, [](double) { return 0.0; });
    return r;
  }
  double min_abs = std::numeric_limits<double>::infinity();
  for (double v : f.samples) min_abs = std::fmin(min_abs, std::fabs(v));
  const double lo = std::fmax(f.dt * min_abs, 1e-9 * scale);
  const double hi = 2.2 * scale;
  solve_fixed_point(r, lo, hi, [&](double u) {
    EncoderConfig cfg;
    cfg.theta = u;
    return l1_norm(if_encode(f, cfg));
  });
  return r;
}

SweepResult threshold_sweep(const HybridSignal& f, const std::vector<double>& thetas) {
  f.validate();
  check_u_grid(thetas);
  SweepResult r;
  r.thresholds = thetas;
  const IntegralFunction a = accumulate(f);
  const double t_end = f.edge(f.samples.size());
  for (double theta : thetas) {
    EncoderConfig cfg;
    cfg.theta = theta;
    cfg.reset = ResetMode::Mod;
    const SpikeTrain mod = if_encode(f, cfg);
    cfg.reset = ResetMode::Sub;
    const SpikeTrain sub = if_encode(f, cfg);
    const PiecewiseLinear gm = sod_pwl_reconstruct(mod, t_end, f.t_start);
    const PiecewiseLinear gs = sod_pwl_reconstruct(sub, t_end, f.t_start);
    double em = 0.0, es = 0.0;
    for (std::size_t i = 1; i <= f.samples.size(); ++i) {
      const double t = f.edge(i);
      em = std::fmax(em, std::fabs(a.edge_values()[i] - gm(t)));
      es = std::fmax(es, std::fabs(a.edge_values()[i] - gs(t)));
    }
    r.max_err_mod.push_back(em);
    r.max_err_sub.push_back(es);
    r.spike_count_mod.push_back(mod.size());
    r.spike_count_sub.push_back(sub.size());
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < r.max_err_sub.size(); ++i) {
    if (r.max_err_sub[i] < r.max_err_sub[arg]) arg = i;
  }
  r.theta_star = thetas.empty() ? 0.0 : thetas[arg];
  return r;
}

}  // namespace tbs
