#pragma once

#include "tbsample/types.hpp"

namespace tbs {

// Integrate-and-fire encoder. Maintains the residual z; at every event instant
// (grid edge, impulse time) with |z| >= theta it emits and resets:
//   Mod: amplitude q_theta(z), z -= q_theta(z)
//   Sub: amplitude sgn(z)*theta, one spike per instant, residual carries.
// Under SubsampleInterp sample-driven crossings are emitted at the exact
// crossing time inside the interval; impulses always trigger at their own
// timestamp. ResetMode::Zero is unsupported and throws.
SpikeTrain if_encode(const HybridSignal& f, const EncoderConfig& cfg);

// Generalized send-on-delta on the sampled amplitudes g_i = g(t_i). Emits
// s = q_theta(g(t_i)) - q_theta(g(t_last)) whenever |g_i - sum of emitted| >=
// theta. The initial record (t_start, 0) is implicit; g must be impulse-free.
SpikeTrain sod_encode(const HybridSignal& g, double theta, double eps = 1e-12);

// SOD of the running integral of f, sampled on f's grid. Equals
// if_encode(f, Mod, GridSnap) bitwise when every impulse time lies on the grid
// (SOD only sees sample instants, so off-grid impulse triggers cannot be
// represented).
SpikeTrain sod_of_integral(const HybridSignal& f, double theta, double eps = 1e-12);

}  // namespace tbs
