#include "tbsample/generate.hpp"

#include <algorithm>
#include <cmath>

namespace tbs {

HybridSignal random_hybrid(Rng& rng, std::size_t n, double dt, std::size_t impulse_count,
                           double sample_scale, double weight_scale, double t_start) {
  std::vector<double> samples(n);
  for (double& v : samples) v = sample_scale * rng.gauss();
  std::vector<std::size_t> slots;
  if (impulse_count > 0 && n > 1) {
    while (slots.size() < impulse_count) {
      const auto j = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n) - 1));
      if (std::find(slots.begin(), slots.end(), j) == slots.end()) slots.push_back(j);
    }
    std::sort(slots.begin(), slots.end());
  }
  HybridSignal f;
  f.t_start = t_start;
  f.dt = dt;
  f.samples = std::move(samples);
  f.t_end = f.edge(n);
  for (std::size_t j : slots) {
    const double mag = rng.uniform(0.5, 3.0) * weight_scale;
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    f.impulses.push_back({f.edge(j), sign * mag});
  }
  f.validate();
  return f;
}

HybridSignal random_continuous(Rng& rng, std::size_t n, double dt, double sample_scale,
                               double t_start) {
  return random_hybrid(rng, n, dt, 0, sample_scale, 0.0, t_start);
}

std::vector<double> accel_like_samples(Rng& rng, std::size_t n, double dt, double scale) {
  const int harmonics = 4;
  std::vector<double> amp(harmonics), freq(harmonics), phase(harmonics);
  for (int h = 0; h < harmonics; ++h) {
    amp[h] = rng.uniform(0.2, 1.0) / (1.0 + h);
    freq[h] = rng.uniform(0.3, 4.0) * (1.0 + h);
    phase[h] = rng.uniform(0.0, 6.283185307179586);
  }
  std::vector<double> out(n);
  double smooth = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i + 1) * dt;
    double v = 0.0;
    for (int h = 0; h < harmonics; ++h) v += amp[h] * std::sin(6.283185307179586 * freq[h] * t + phase[h]);
    smooth = 0.95 * smooth + 0.05 * rng.uniform(-1.0, 1.0);
    out[i] = scale * (v + 0.5 * smooth);
  }
  return out;
}

HybridSignal slow_signal(Rng& rng, std::size_t n, double dt, double limit) {
  const double cap = 0.5 * limit / dt;
  std::vector<double> samples = accel_like_samples(rng, n, dt, 1.0);
  double peak = 0.0;
  for (double v : samples) peak = std::fmax(peak, std::fabs(v));
  const double gain = peak > 0.0 ? cap / peak : 0.0;
  for (double& v : samples) v *= gain;
  HybridSignal f;
  f.t_start = 0.0;
  f.dt = dt;
  f.samples = std::move(samples);
  f.t_end = f.edge(n);
  f.validate();
  return f;
}

HybridSignal oracle_instance(Rng& rng, std::size_t n, double theta, bool with_impulse) {
  const double dt = 0.5;
  std::vector<double> samples(n);
  for (double& v : samples) v = rng.uniform(-1.2, 1.2) * theta / dt;
  HybridSignal f;
  f.t_start = 0.0;
  f.dt = dt;
  f.samples = std::move(samples);
  f.t_end = f.edge(n);
  if (with_impulse && n >= 2) {
    const auto j = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n)));
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    // keep |f_j*dt + w| <= 2*theta
    f.impulses.push_back({f.edge(j), sign * rng.uniform(0.2, 0.8) * theta});
  }
  f.validate();
  return f;
}

std::uint64_t fnv1a(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tbs
