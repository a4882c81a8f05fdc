#pragma once

#include <cstddef>
#include <vector>

#include "tbsample/types.hpp"

namespace tbs {

// Uniform grid a reconstruction is emitted on (t_end = t_start + n*dt).
struct SignalGrid {
  double t_start = 0.0;
  double dt = 0.0;
  std::size_t n = 0;

  double edge(std::size_t i) const { return t_start + static_cast<double>(i) * dt; }
  double t_end() const { return edge(n); }
};

SignalGrid grid_of(const HybridSignal& f);

// Piecewise-linear reconstruction handle: on [knot_k, knot_{k+1}) the value is
// base_k + slope_k * (t - knot_k); the final piece is flat.
struct PiecewiseLinear {
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<double> knots;
  std::vector<double> base;
  std::vector<double> slope;

  double operator()(double t) const;
};

// Cumulative-sum step function: value sum_{t_k <= t} s_k, 0 before the first
// spike, held to t_end. When s = SOD_theta(g): sup_distance(g, result) < theta.
StepFunction sod_step_reconstruct(const SpikeTrain& s, double t_end, double t_start = 0.0);

// Piecewise-linear reconstruction: base sum_{j<=k} s_j on [t_k, t_{k+1}) plus,
// when |s_{k+1}| <= theta, a ramp of slope theta*sgn(s_{k+1})/(t_{k+1}-t_k).
// Includes the implicit k = 0 piece from t_start. When s = SOD_theta(g):
// sup_distance(g, result) < 2*theta.
PiecewiseLinear sod_pwl_reconstruct(const SpikeTrain& s, double t_end, double t_start = 0.0);

// Reconstruction from an IF/mod train: Dirac terms z_k at spikes with
// |z_k| > theta, gated constant slopes theta*sgn(z_{k+1})/(t_{k+1}-t_k) on the
// pieces between spikes, emitted on the given grid (spike times must lie on
// grid edges). Re-encoding the result with IF/mod returns z.
HybridSignal if_mod_reconstruct(const SpikeTrain& z, const SignalGrid& grid);

// Reconstruction from an IF/sub train (all amplitudes +-theta): constant
// theta*sgn(z_{k+1})/(t_{k+1}-t_k) between spikes, no impulses.
HybridSignal if_sub_reconstruct(const SpikeTrain& z, const SignalGrid& grid);

// Samples a piecewise-linear handle onto a grid (used by round-trip tests).
HybridSignal sample_to_signal(const PiecewiseLinear& g, const SignalGrid& grid);

}  // namespace tbs
