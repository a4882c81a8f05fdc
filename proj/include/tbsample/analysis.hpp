#pragma once

#include <cstddef>
#include <vector>

#include "tbsample/types.hpp"

namespace tbs {

struct BoundCheck {
  double distance = 0.0;
  bool holds = false;
};

// distance = ||f - IF^M_theta(f)||_A and whether it is < theta*(1 - eps).
BoundCheck check_quantization_bound(const HybridSignal& f, double theta, double eps = 1e-12);

struct QuasiIsometryCheck {
  double lhs = 0.0;  // ||IF^M(g) - IF^M(f)||_A
  double rhs = 0.0;  // ||g - f||_A
  bool holds = false;
};

// Requires f and g on the identical grid; holds iff |lhs - rhs| < 2*theta.
QuasiIsometryCheck check_quasi_isometry(const HybridSignal& f, const HybridSignal& g, double theta);

enum class SparsityMode { SupNormSOD, AlexIF };

struct SparsityResult {
  double min_l1 = 0.0;
  SpikeTrain witness;
  bool unique = true;
  bool feasible = false;  // false when no candidate train fits the ball
};

// Exhaustive minimum-l1 search over candidate trains on the sample grid with
// amplitudes in theta*{-max_mult..max_mult}. Feasibility: the step function of
// the candidate stays within the open sup-norm theta-ball of f (SupNormSOD),
// or the candidate stays within the open Alexiewicz theta-ball (AlexIF).
// Throws size_limit_error when (2*max_mult+1)^n exceeds the cap.
SparsityResult sparsity_oracle(const HybridSignal& f, double theta, SparsityMode mode,
                               int max_mult, double cap = 1e8);

struct RegularizationResult {
  double lambda = 0.0;
  std::vector<double> u_grid;
  std::vector<double> alpha;      // distance term per u
  std::vector<double> beta;       // sparsity term per u
  std::vector<double> l1;         // ||encode_u(f)||_1 per u
  std::vector<double> objective;  // alpha + lambda*beta
  double u_min_objective = 0.0;
  double u_fixed_point = 0.0;
  bool fixed_point_found = false;
  bool degenerate = false;  // h > 0 on the whole bracket (e.g. f == 0)
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double initial_width = 0.0;
  double final_width = 0.0;
  bool alpha_nondecreasing = true;
  bool l1_nonincreasing = true;
};

// SOD variant (sup-norm model): alpha(u) = ||f - chi_u||_inf with
// chi_u the SOD step reconstruction, beta(u) = TV(chi_u)/u, and the lambda-free
// fixed point u* of h(u) = u - ||SOD_u(f)||_1 located by bisection on the sign
// change. f must be impulse-free.
RegularizationResult regularization_sweep(const HybridSignal& f, double lambda,
                                          const std::vector<double>& u_grid);

// Alexiewicz variant: alpha(u) = ||f - IF^M_u(f)||_A, beta(u) = l1/u, fixed
// point of u - ||IF^M_u(f)||_1. Impulses allowed.
RegularizationResult if_regularization_sweep(const HybridSignal& f, double lambda,
                                             const std::vector<double>& u_grid);

struct SweepResult {
  std::vector<double> thresholds;
  std::vector<double> max_err_mod;
  std::vector<double> max_err_sub;
  std::vector<std::size_t> spike_count_mod;
  std::vector<std::size_t> spike_count_sub;
  double theta_star = 0.0;  // threshold minimizing max_err_sub
};

// For each theta: encode f with Mod and Sub, evaluate the piecewise-linear
// reconstruction of each train against A(f) at all sample edges.
SweepResult threshold_sweep(const HybridSignal& f, const std::vector<double>& thetas);

}  // namespace tbs
