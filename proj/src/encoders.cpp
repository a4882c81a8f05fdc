#include "tbsample/encoders.hpp"

#include <cmath>
#include <stdexcept>

#include "tbsample/integral.hpp"
#include "tbsample/quantize.hpp"

namespace tbs {
namespace {

// Evaluates the trigger at one instant: z = p - theta*level, fires when the
// quantized multiple is nonzero. Mod discharges the full multiple; Sub emits a
// single +-theta and leaves the remainder to carry.
void trigger_at(double t, double p, double theta, double eps, ResetMode reset,
                std::int64_t& level, std::vector<Spike>& out) {
  const double z = p - theta * static_cast<double>(level);
  const std::int64_t k = quantize_multiple(z, theta, eps);
  if (k == 0) return;
  if (reset == ResetMode::Mod) {
    out.push_back({t, theta * static_cast<double>(k)});
    level += k;
  } else {
    const std::int64_t step = k > 0 ? 1 : -1;
    out.push_back({t, theta * static_cast<double>(step)});
    level += step;
  }
}

SpikeTrain encode_grid_snap(const HybridSignal& f, const EncoderConfig& cfg) {
  SpikeTrain out;
  out.theta = cfg.theta;
  std::int64_t level = 0;
  walk_integral(f, [&](double t, double /*pre*/, double post, bool /*edge*/) {
    trigger_at(t, post, cfg.theta, cfg.eps, cfg.reset, level, out.spikes);
  });
  return out;
}

SpikeTrain encode_subsample(const HybridSignal& f, const EncoderConfig& cfg) {
  const double theta = cfg.theta;
  SpikeTrain out;
  out.theta = theta;
  std::int64_t level = 0;
  const std::size_t n = f.samples.size();
  const std::size_t m = f.impulses.size();
  double p = 0.0;
  std::size_t j = 0;

  // emits the exact threshold crossings inside (t_a, t_b) for slope v, with
  // prefix p0 at t_a; skipped while a carried residual is still >= theta
  auto emit_crossings = [&](double t_a, double t_b, double v) {
    if (v == 0.0) return;
    double t_cur = t_a;
    double z0 = p - theta * static_cast<double>(level);
    while (quantize_multiple(z0, theta, cfg.eps) == 0) {
      const double dir = v > 0.0 ? 1.0 : -1.0;
      const double t_star = t_cur + (theta * dir - z0) / v;
      if (!(t_star < t_b)) break;
      out.spikes.push_back({t_star, theta * dir});
      level += v > 0.0 ? 1 : -1;
      t_cur = t_star;
      z0 = 0.0;
    }
  };

  for (std::size_t i = 1; i <= n; ++i) {
    const double e_prev = f.edge(i - 1);
    const double e_i = f.edge(i);
    const double v = f.samples[i - 1];
    double t_seg = e_prev;
    while (j < m && f.impulses[j].time < e_i) {
      const double tau = f.impulses[j].time;
      emit_crossings(t_seg, tau, v);
      p += v * (tau - t_seg);
      p += f.impulses[j].weight;
      trigger_at(tau, p, theta, cfg.eps, cfg.reset, level, out.spikes);
      t_seg = tau;
      ++j;
    }
    emit_crossings(t_seg, e_i, v);
    p += (t_seg == e_prev) ? v * f.dt : v * (e_i - t_seg);
    while (j < m && f.impulses[j].time == e_i) {
      p += f.impulses[j].weight;
      ++j;
    }
    trigger_at(e_i, p, theta, cfg.eps, cfg.reset, level, out.spikes);
  }
  return out;
}

}  // namespace

SpikeTrain if_encode(const HybridSignal& f, const EncoderConfig& cfg) {
  f.validate();
  if (!(cfg.theta > 0.0) || !std::isfinite(cfg.theta))
    throw std::invalid_argument("if_encode: theta must be positive");
  if (cfg.reset == ResetMode::Zero)
    throw std::invalid_argument("if_encode: reset-to-zero is unsupported");
  if (cfg.event_time_policy == EventTimePolicy::GridSnap) return encode_grid_snap(f, cfg);
  return encode_subsample(f, cfg);
}

SpikeTrain sod_encode(const HybridSignal& g, double theta, double eps) {
  g.validate();
  if (!g.impulses.empty())
    throw std::invalid_argument("sod_encode: impulses present (SOD reads amplitudes)");
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::invalid_argument("sod_encode: theta must be positive");
  // g(t_start) = 0 is the implicit initial record (t_start, 0); the sample
  // model stores values on half-open intervals, so there is nothing to check.
  SpikeTrain out;
  out.theta = theta;
  std::int64_t level = 0;
  for (std::size_t i = 1; i <= g.samples.size(); ++i) {
    const double z = g.samples[i - 1] - theta * static_cast<double>(level);
    const std::int64_t k = quantize_multiple(z, theta, eps);
    if (k != 0) {
      out.spikes.push_back({g.edge(i), theta * static_cast<double>(k)});
      level += k;
    }
  }
  return out;
}

SpikeTrain sod_of_integral(const HybridSignal& f, double theta, double eps) {
  const IntegralFunction a = accumulate(f);
  HybridSignal g;
  g.t_start = f.t_start;
  g.dt = f.dt;
  g.samples.assign(a.edge_values().begin() + 1, a.edge_values().end());
  g.t_end = g.edge(g.samples.size());
  return sod_encode(g, theta, eps);
}

}  // namespace tbs
