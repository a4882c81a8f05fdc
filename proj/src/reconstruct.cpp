#include "tbsample/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tbsample/quantize.hpp"

namespace tbs {

SignalGrid grid_of(const HybridSignal& f) { return {f.t_start, f.dt, f.samples.size()}; }

double PiecewiseLinear::operator()(double t) const {
  if (knots.empty()) return 0.0;
  auto it = std::upper_bound(knots.begin(), knots.end(), t);
  if (it == knots.begin()) return base.front();
  const std::size_t p = static_cast<std::size_t>(it - knots.begin()) - 1;
  return base[p] + slope[p] * (t - knots[p]);
}

StepFunction sod_step_reconstruct(const SpikeTrain& s, double t_end, double t_start) {
  s.validate();
  if (!s.spikes.empty() && t_end < s.spikes.back().time)
    throw std::invalid_argument("sod_step_reconstruct: t_end before the last spike");
  StepFunction x;
  x.t_start = t_start;
  x.t_end = t_end;
  double acc = 0.0;
  for (const Spike& sp : s.spikes) {
    acc += sp.amplitude;
    x.breakpoints.push_back(sp.time);
    x.values.push_back(acc);
  }
  return x;
}

PiecewiseLinear sod_pwl_reconstruct(const SpikeTrain& s, double t_end, double t_start) {
  s.validate();
  if (!s.spikes.empty() && t_end < s.spikes.back().time)
    throw std::invalid_argument("sod_pwl_reconstruct: t_end before the last spike");
  if (!s.spikes.empty() && !(s.spikes.front().time > t_start))
    throw std::invalid_argument("sod_pwl_reconstruct: first spike not after t_start");
  PiecewiseLinear g;
  g.t_start = t_start;
  g.t_end = t_end;
  const std::size_t k_count = s.spikes.size();
  g.knots.reserve(k_count + 1);
  g.base.reserve(k_count + 1);
  g.slope.reserve(k_count + 1);
  g.knots.push_back(t_start);
  g.base.push_back(0.0);
  double acc = 0.0;
  for (const Spike& sp : s.spikes) {
    acc += sp.amplitude;
    g.knots.push_back(sp.time);
    g.base.push_back(acc);
  }
  for (std::size_t p = 0; p <= k_count; ++p) {
    if (p == k_count) {
      g.slope.push_back(0.0);  // held after the final spike
      continue;
    }
    const double s_next = s.spikes[p].amplitude;
    const std::int64_t m = quantize_multiple(s_next, s.theta);
    if (std::llabs(m) <= 1) {
      const double dir = m > 0 ? 1.0 : -1.0;
      g.slope.push_back(s.theta * dir / (g.knots[p + 1] - g.knots[p]));
    } else {
      g.slope.push_back(0.0);  // gate |s_{k+1}| <= theta off
    }
  }
  return g;
}

namespace {

// Maps spike times onto grid edges; throws when a time is off the grid or two
// spikes collapse onto one edge.
std::vector<std::size_t> grid_indices(const SpikeTrain& z, const SignalGrid& grid) {
  std::vector<std::size_t> idx;
  idx.reserve(z.spikes.size());
  std::size_t prev = 0;
  for (const Spike& sp : z.spikes) {
    const double r = (sp.time - grid.t_start) / grid.dt;
    const auto j = static_cast<long long>(std::llround(r));
    if (j < 1 || static_cast<std::size_t>(j) > grid.n ||
        std::fabs(sp.time - grid.edge(static_cast<std::size_t>(j))) > 1e-9 * grid.dt)
      throw std::invalid_argument("reconstruct: spike time not on the sampling grid");
    const auto ju = static_cast<std::size_t>(j);
    if (!idx.empty() && ju <= prev)
      throw std::invalid_argument("reconstruct: spike spacing below the grid dt");
    idx.push_back(ju);
    prev = ju;
  }
  return idx;
}

}  // namespace

HybridSignal if_mod_reconstruct(const SpikeTrain& z, const SignalGrid& grid) {
  z.validate();
  if (!(grid.dt > 0.0)) throw std::invalid_argument("if_mod_reconstruct: grid dt must be positive");
  const std::vector<std::size_t> idx = grid_indices(z, grid);
  HybridSignal f;
  f.t_start = grid.t_start;
  f.dt = grid.dt;
  f.samples.assign(grid.n, 0.0);
  f.t_end = grid.edge(grid.n);
  std::size_t j_prev = 0;
  for (std::size_t k = 0; k < z.spikes.size(); ++k) {
    const double amp = z.spikes[k].amplitude;
    const std::int64_t m = quantize_multiple(amp, z.theta);
    const std::size_t j_k = idx[k];
    if (std::llabs(m) > 1) {
      // q_theta(z_k) = z_k on the lattice: the spike becomes a Dirac term
      f.impulses.push_back({grid.edge(j_k), amp});
    } else {
      const double dir = m > 0 ? 1.0 : -1.0;
      const double v = z.theta * dir / (grid.edge(j_k) - grid.edge(j_prev));
      for (std::size_t i = j_prev + 1; i <= j_k; ++i) f.samples[i - 1] = v;
    }
    j_prev = j_k;
  }
  f.validate();
  return f;
}

HybridSignal if_sub_reconstruct(const SpikeTrain& z, const SignalGrid& grid) {
  z.validate();
  if (!(grid.dt > 0.0)) throw std::invalid_argument("if_sub_reconstruct: grid dt must be positive");
  for (const Spike& sp : z.spikes) {
    if (std::llabs(quantize_multiple(sp.amplitude, z.theta)) != 1)
      throw std::invalid_argument("if_sub_reconstruct: amplitude not in {+theta, -theta}");
  }
  const std::vector<std::size_t> idx = grid_indices(z, grid);
  HybridSignal f;
  f.t_start = grid.t_start;
  f.dt = grid.dt;
  f.samples.assign(grid.n, 0.0);
  f.t_end = grid.edge(grid.n);
  std::size_t j_prev = 0;
  for (std::size_t k = 0; k < z.spikes.size(); ++k) {
    const std::size_t j_k = idx[k];
    const double dir = z.spikes[k].amplitude > 0.0 ? 1.0 : -1.0;
    const double v = z.theta * dir / (grid.edge(j_k) - grid.edge(j_prev));
    for (std::size_t i = j_prev + 1; i <= j_k; ++i) f.samples[i - 1] = v;
    j_prev = j_k;
  }
  f.validate();
  return f;
}

HybridSignal sample_to_signal(const PiecewiseLinear& g, const SignalGrid& grid) {
  HybridSignal f;
  f.t_start = grid.t_start;
  f.dt = grid.dt;
  f.samples.resize(grid.n);
  f.t_end = grid.edge(grid.n);
  for (std::size_t i = 1; i <= grid.n; ++i) f.samples[i - 1] = g(grid.edge(i));
  return f;
}

}  // namespace tbs
