#pragma once

#include "tbsample/integral.hpp"
#include "tbsample/types.hpp"

namespace tbs {

// sup_T |A(f)(T)|, exact for the piecewise-linear A: the sup is attained at a
// breakpoint, evaluated at every edge and at each impulse time both with and
// without its jump.
double alexiewicz_norm_signal(const HybridSignal& f);

// max_k |sum_{j<=k} s_j|; 0 for the empty train.
double alexiewicz_norm_spikes(const SpikeTrain& s);

// ||f - s||_A with s merged into f as impulses of negative weight. Candidates
// are recorded only after all events sharing a timestamp (jump-inclusive),
// i.e. the residual that remains once an instant has been fully processed.
double alexiewicz_distance(const HybridSignal& f, const SpikeTrain& s);

double l1_norm(const SpikeTrain& s);

// Sum of absolute jumps, including the jump from the implicit initial 0.
double tv_norm(const StepFunction& x);

// max_i |f_i - x(t_i)| over the sample instants t_i = edge(i). f must not
// contain impulses.
double sup_distance(const HybridSignal& f, const StepFunction& x);

// Formal difference of two spike trains as a train on the merged time set
// (zero net amplitudes dropped). Used by the quasi-isometry lhs.
SpikeTrain train_difference(const SpikeTrain& a, const SpikeTrain& b);

// Scales every amplitude by c (c != 0), threshold by |c|.
SpikeTrain train_scale(const SpikeTrain& s, double c);

}  // namespace tbs
