#pragma once

#include <cstdint>
#include <vector>

#include "tbsample/rng.hpp"
#include "tbsample/types.hpp"

namespace tbs {

// Random hybrid signal: n gaussian samples, impulse_count impulses placed at
// distinct interior grid edges with weights uniform in +-[0.5, 3]*weight_scale.
HybridSignal random_hybrid(Rng& rng, std::size_t n, double dt, std::size_t impulse_count,
                           double sample_scale, double weight_scale, double t_start = 0.0);

// Impulse-free gaussian signal.
HybridSignal random_continuous(Rng& rng, std::size_t n, double dt, double sample_scale,
                               double t_start = 0.0);

// Smooth band-limited signal (sum of a few sinusoids plus smoothed noise),
// values roughly within +-1 * scale. Stands in for accelerometer-style data.
std::vector<double> accel_like_samples(Rng& rng, std::size_t n, double dt, double scale);

// Slow signal with max_i |f_i| * dt < limit (margin factor 0.5).
HybridSignal slow_signal(Rng& rng, std::size_t n, double dt, double limit);

// Small instance for the sparsity oracle: |f_i * dt + w| <= 2*theta at every
// instant so the encoder amplitudes fit within +-3*theta.
HybridSignal oracle_instance(Rng& rng, std::size_t n, double theta, bool with_impulse);

// FNV-1a over a byte buffer, used to pin generated files.
std::uint64_t fnv1a(const void* data, std::size_t len);

}  // namespace tbs
