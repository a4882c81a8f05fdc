#include "tbsample/types.hpp"

#include <algorithm>
#include <cmath>

#include "tbsample/quantize.hpp"

namespace tbs {

void HybridSignal::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("HybridSignal: dt must be positive");
  if (!std::isfinite(t_start) || !std::isfinite(t_end))
    throw std::invalid_argument("HybridSignal: non-finite domain");
  const double n_dt_end = edge(samples.size());
  if (std::fabs(t_end - n_dt_end) > 1e-9 * std::fmax(1.0, std::fabs(n_dt_end)))
    throw std::invalid_argument("HybridSignal: t_end does not match t_start + n*dt");
  for (double v : samples) {
    if (!std::isfinite(v)) throw std::invalid_argument("HybridSignal: non-finite sample");
  }
  double prev = t_start;
  bool first = true;
  for (const Impulse& im : impulses) {
    if (!std::isfinite(im.time) || !std::isfinite(im.weight))
      throw std::invalid_argument("HybridSignal: non-finite impulse");
    if (first ? !(im.time > t_start) : !(im.time > prev))
      throw std::invalid_argument("HybridSignal: impulse times must be strictly increasing within (t_start, t_end]");
    if (im.time > n_dt_end) throw std::invalid_argument("HybridSignal: impulse beyond t_end");
    prev = im.time;
    first = false;
  }
}

HybridSignal make_signal(double t_start, double dt, std::vector<double> samples,
                         std::vector<Impulse> impulses) {
  HybridSignal f;
  f.t_start = t_start;
  f.dt = dt;
  f.samples = std::move(samples);
  f.impulses = std::move(impulses);
  f.t_end = f.edge(f.samples.size());
  f.validate();
  return f;
}

void SpikeTrain::validate(double eps) const {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw std::invalid_argument("SpikeTrain: theta must be positive");
  double prev = 0.0;
  bool first = true;
  for (const Spike& sp : spikes) {
    if (!std::isfinite(sp.time) || !std::isfinite(sp.amplitude))
      throw std::invalid_argument("SpikeTrain: non-finite spike");
    if (!first && !(sp.time > prev)) throw std::invalid_argument("SpikeTrain: times must be strictly increasing");
    const std::int64_t k = quantize_multiple(sp.amplitude, theta, eps);
    if (k == 0 || std::fabs(sp.amplitude - theta * static_cast<double>(k)) >
                      eps * std::fmax(1.0, std::fabs(sp.amplitude)))
      throw std::invalid_argument("SpikeTrain: amplitude is not a nonzero multiple of theta");
    prev = sp.time;
    first = false;
  }
}

bool trains_equal(const SpikeTrain& a, const SpikeTrain& b) {
  if (a.spikes.size() != b.spikes.size()) return false;
  for (std::size_t i = 0; i < a.spikes.size(); ++i) {
    if (a.spikes[i].time != b.spikes[i].time) return false;
    if (a.spikes[i].amplitude != b.spikes[i].amplitude) return false;
  }
  return true;
}

double StepFunction::operator()(double t) const {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  if (it == breakpoints.begin()) return 0.0;
  return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

void StepFunction::validate() const {
  if (breakpoints.size() != values.size())
    throw std::invalid_argument("StepFunction: breakpoint count must equal value count");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
  }
}

}  // namespace tbs
