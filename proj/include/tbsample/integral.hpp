#pragma once

#include <cstddef>
#include <vector>

#include "tbsample/types.hpp"

namespace tbs {

// A(f)(t) = integral of f over (t_start, t], piecewise linear between
// breakpoints with jumps at impulse times. Queries return the jump-inclusive
// value; value_before gives the left limit.
class IntegralFunction {
 public:
  IntegralFunction() = default;

  double operator()(double t) const;
  double value_before(double t) const;

  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }
  // Jump-inclusive values at the sample edges, edge_values()[i] = A(edge(i)).
  // These are the exact prefix floats of the walk (bit-stable for re-use).
  const std::vector<double>& edge_values() const { return edge_values_; }

 private:
  friend IntegralFunction accumulate(const HybridSignal& f);

  double t_start_ = 0.0;
  double t_end_ = 0.0;
  std::vector<double> times_;        // breakpoints: edges and impulse times
  std::vector<double> value_after_;  // A at breakpoint, jump included
  std::vector<double> slope_;        // slope on (times_[j], times_[j+1])
  std::vector<double> edge_values_;  // size n+1, edge_values_[0] = 0
};

IntegralFunction accumulate(const HybridSignal& f);

// Internal event walk shared by accumulate, the encoders and the norms, so all
// of them see bitwise identical prefix values. cb(t, value_before_jump,
// value_after_jump, is_grid_edge) fires at every grid edge and impulse time in
// order; for plain edges both values coincide.
template <class F>
void walk_integral(const HybridSignal& f, F&& cb) {
  const std::size_t n = f.samples.size();
  const std::size_t m = f.impulses.size();
  double p = 0.0;
  std::size_t j = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double e_prev = f.edge(i - 1);
    const double e_i = f.edge(i);
    const double v = f.samples[i - 1];
    double t_seg = e_prev;
    while (j < m && f.impulses[j].time < e_i) {
      const double tau = f.impulses[j].time;
      p += v * (tau - t_seg);
      const double pre = p;
      p += f.impulses[j].weight;
      cb(tau, pre, p, false);
      t_seg = tau;
      ++j;
    }
    if (t_seg == e_prev) {
      p += v * f.dt;  // single product keeps the no-impulse path canonical
    } else {
      p += v * (e_i - t_seg);
    }
    const double pre = p;
    while (j < m && f.impulses[j].time == e_i) {
      p += f.impulses[j].weight;
      ++j;
    }
    cb(e_i, pre, p, true);
  }
}

}  // namespace tbs
