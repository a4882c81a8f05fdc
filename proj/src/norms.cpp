#include "tbsample/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbs {

double alexiewicz_norm_signal(const HybridSignal& f) {
  f.validate();
  double m = 0.0;
  walk_integral(f, [&](double /*t*/, double pre, double post, bool /*edge*/) {
    m = std::fmax(m, std::fabs(pre));
    m = std::fmax(m, std::fabs(post));
  });
  return m;
}

double alexiewicz_norm_spikes(const SpikeTrain& s) {
  double acc = 0.0;
  double m = 0.0;
  for (const Spike& sp : s.spikes) {
    acc += sp.amplitude;
    m = std::fmax(m, std::fabs(acc));
  }
  return m;
}

double alexiewicz_distance(const HybridSignal& f, const SpikeTrain& s) {
  f.validate();
  const double lo = f.t_start;
  const double hi = f.edge(f.samples.size());
  for (const Spike& sp : s.spikes) {
    if (!(sp.time > lo) || sp.time > hi)
      throw std::invalid_argument("alexiewicz_distance: spike outside the signal domain");
  }
  // merge spikes (negated) into the impulse list; coincident times combine
  HybridSignal g = f;
  std::vector<Impulse> merged;
  merged.reserve(f.impulses.size() + s.spikes.size());
  std::size_t i = 0, j = 0;
  while (i < f.impulses.size() || j < s.spikes.size()) {
    if (j >= s.spikes.size() ||
        (i < f.impulses.size() && f.impulses[i].time < s.spikes[j].time)) {
      merged.push_back(f.impulses[i]);
      ++i;
    } else if (i >= f.impulses.size() || s.spikes[j].time < f.impulses[i].time) {
      merged.push_back({s.spikes[j].time, -s.spikes[j].amplitude});
      ++j;
    } else {
      merged.push_back({f.impulses[i].time, f.impulses[i].weight - s.spikes[j].amplitude});
      ++i;
      ++j;
    }
  }
  g.impulses = std::move(merged);
  double m = 0.0;
  walk_integral(g, [&](double /*t*/, double /*pre*/, double post, bool /*edge*/) {
    m = std::fmax(m, std::fabs(post));
  });
  return m;
}

double l1_norm(const SpikeTrain& s) {
  double acc = 0.0;
  for (const Spike& sp : s.spikes) acc += std::fabs(sp.amplitude);
  return acc;
}

double tv_norm(const StepFunction& x) {
  x.validate();
  double acc = 0.0;
  double prev = 0.0;
  for (double v : x.values) {
    acc += std::fabs(v - prev);
    prev = v;
  }
  return acc;
}

double sup_distance(const HybridSignal& f, const StepFunction& x) {
  f.validate();
  if (!f.impulses.empty())
    throw std::invalid_argument("sup_distance: signal contains impulses");
  double m = 0.0;
  for (std::size_t i = 1; i <= f.samples.size(); ++i) {
    m = std::fmax(m, std::fabs(f.samples[i - 1] - x(f.edge(i))));
  }
  return m;
}

SpikeTrain train_difference(const SpikeTrain& a, const SpikeTrain& b) {
  SpikeTrain d;
  d.theta = a.theta;
  std::size_t i = 0, j = 0;
  while (i < a.spikes.size() || j < b.spikes.size()) {
    if (j >= b.spikes.size() ||
        (i < a.spikes.size() && a.spikes[i].time < b.spikes[j].time)) {
      d.spikes.push_back(a.spikes[i]);
      ++i;
    } else if (i >= a.spikes.size() || b.spikes[j].time < a.spikes[i].time) {
      d.spikes.push_back({b.spikes[j].time, -b.spikes[j].amplitude});
      ++j;
    } else {
      const double amp = a.spikes[i].amplitude - b.spikes[j].amplitude;
      if (amp != 0.0) d.spikes.push_back({a.spikes[i].time, amp});
      ++i;
      ++j;
    }
  }
  return d;
}

SpikeTrain train_scale(const SpikeTrain& s, double c) {
  if (c == 0.0 || !std::isfinite(c)) throw std::invalid_argument("train_scale: c must be finite and nonzero");
  SpikeTrain out;
  out.theta = std::fabs(c) * s.theta;
  out.spikes = s.spikes;
  for (Spike& sp : out.spikes) sp.amplitude *= c;
  return out;
}

}  // namespace tbs
