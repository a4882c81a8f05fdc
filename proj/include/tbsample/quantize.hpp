#pragma once

#include <cstdint>

namespace tbs {

// Integer multiple k with q_theta(x) = theta*k, quantization by truncation.
// Values within a relative eps of an exact multiple snap to it, which absorbs
// the rounding drift of long prefix-sum walks.
std::int64_t quantize_multiple(double x, double theta, double eps = 1e-12);

// q_theta(x) = theta * sgn(x) * floor(|x| / theta).
double quantize_trunc(double x, double theta, double eps = 1e-12);

}  // namespace tbs
