#include "tbsample/integral.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbs {

IntegralFunction accumulate(const HybridSignal& f) {
  f.validate();
  IntegralFunction a;
  a.t_start_ = f.t_start;
  a.t_end_ = f.edge(f.samples.size());
  a.times_.push_back(f.t_start);
  a.value_after_.push_back(0.0);
  a.edge_values_.push_back(0.0);
  std::size_t seg = 1;
  walk_integral(f, [&](double t, double /*pre*/, double post, bool is_edge) {
    a.slope_.push_back(f.samples[seg - 1]);
    a.times_.push_back(t);
    a.value_after_.push_back(post);
    if (is_edge) {
      a.edge_values_.push_back(post);
      ++seg;
    }
  });
  return a;
}

double IntegralFunction::operator()(double t) const {
  if (times_.empty()) return 0.0;
  if (t <= times_.front()) return 0.0;
  if (t >= times_.back()) return value_after_.back();
  // last breakpoint <= t
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - times_.begin()) - 1;
  return value_after_[j] + slope_[j] * (t - times_[j]);
}

double IntegralFunction::value_before(double t) const {
  if (times_.empty()) return 0.0;
  if (t <= times_.front()) return 0.0;
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  if (it != times_.end() && *it == t) {
    const std::size_t j = static_cast<std::size_t>(it - times_.begin());
    return value_after_[j - 1] + slope_[j - 1] * (t - times_[j - 1]);
  }
  return (*this)(t);
}

}  // namespace tbs
