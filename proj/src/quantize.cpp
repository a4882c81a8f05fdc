#include "tbsample/quantize.hpp"

#include <cmath>
#include <stdexcept>

namespace tbs {

std::int64_t quantize_multiple(double x, double theta, double eps) {
  if (!std::isfinite(x)) throw std::invalid_argument("quantize: non-finite value");
  if (!std::isfinite(theta) || theta <= 0.0) throw std::invalid_argument("quantize: theta must be positive");
  if (eps < 0.0) throw std::invalid_argument("quantize: eps must be >= 0");
  const double r = x / theta;
  const double nearest = std::round(r);
  if (std::fabs(r - nearest) <= eps * std::fmax(1.0, std::fabs(r))) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::trunc(r));
}

double quantize_trunc(double x, double theta, double eps) {
  return theta * static_cast<double>(quantize_multiple(x, theta, eps));
}

}  // namespace tbs
