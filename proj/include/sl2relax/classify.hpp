#pragma once

#include "sl2relax/models.hpp"
#include "sl2relax/scalar_fun.hpp"

namespace sl2relax {

struct ConvexityCheck {
  bool flag;
  double min_value;  // worst divided second difference / forward difference
  double witness_t;  // grid location of the worst value
};

// Convexity of the sampled restriction via divided second differences
// f[t_{i-1}, t_i, t_{i+1}] (these approach f''/2 under refinement). Grid
// semantics only; refinement studies live in the acceptance suite.
ConvexityCheck is_convex_scalar(const SampledFn& f, double tol);

// Monotonicity on a nonnegative grid via forward differences, each allowed
// to dip -tol times its own spacing.
ConvexityCheck is_nondecreasing(const SampledFn& f, double tol);

struct ClassificationReport {
  // The four notions coincide for objective isotropic energies on SL(2),
  // so every report carries four equal flags.
  bool rank_one_convex;
  bool polyconvex;
  bool quasiconvex;
  bool convex_on_sl2;
  double min_second_difference;
  double min_forward_difference;
  double witness_t;
  Grid grid_used;
  double tolerance;  // effective absolute tolerance after scaling
};

// Runs the profile convexity test on phi_tilde over the grid and the
// monotonicity test on phi over the grid's nonnegative part; the flags are
// the conjunction. rel_tol is scaled by max(1, max|phi_tilde|) on the grid.
ClassificationReport classify_energy(const EnergyModel& model, const Grid& grid,
                                     double rel_tol = 1e-8);

}  // namespace sl2relax
