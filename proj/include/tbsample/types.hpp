#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tbs {

enum class ResetMode { Mod, Sub, Zero };
enum class EventTimePolicy { GridSnap, SubsampleInterp };

// Thrown when a brute-force search would exceed its configured cap.
class size_limit_error : public std::runtime_error {
 public:
  explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct Impulse {
  double time = 0.0;
  double weight = 0.0;
};

// Uniformly sampled piecewise-constant signal plus finitely many Dirac impulses.
// samples[i-1] is the value of f on ((i-1)*dt + t_start, i*dt + t_start].
struct HybridSignal {
  double t_start = 0.0;
  double t_end = 0.0;
  double dt = 0.0;
  std::vector<double> samples;
  std::vector<Impulse> impulses;

  std::size_t size() const { return samples.size(); }
  // Grid edge i (i = 0 is t_start, i = size() is t_end). All code uses this one
  // expression so equal times compare equal bitwise.
  double edge(std::size_t i) const { return t_start + static_cast<double>(i) * dt; }
  void validate() const;
};

// Convenience constructor computing t_end from the grid.
HybridSignal make_signal(double t_start, double dt, std::vector<double> samples,
                         std::vector<Impulse> impulses = {});

struct Spike {
  double time = 0.0;
  double amplitude = 0.0;
};

// Finite sorted spike train with amplitudes in theta*Z (element of S_theta).
struct SpikeTrain {
  double theta = 0.0;
  std::vector<Spike> spikes;

  std::size_t size() const { return spikes.size(); }
  bool empty() const { return spikes.empty(); }
  void validate(double eps = 1e-12) const;
};

bool trains_equal(const SpikeTrain& a, const SpikeTrain& b);

// Right-open step function: value values[k] on [breakpoints[k], breakpoints[k+1]),
// implicit value 0 on [t_start, breakpoints[0]), last value held to t_end.
struct StepFunction {
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<double> breakpoints;
  std::vector<double> values;

  double operator()(double t) const;
  void validate() const;
};

struct EncoderConfig {
  double theta = 1.0;
  ResetMode reset = ResetMode::Mod;
  EventTimePolicy event_time_policy = EventTimePolicy::GridSnap;
  double eps = 1e-12;  // relative comparison tolerance
};

}  // namespace tbs
