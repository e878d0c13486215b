#pragma once

#include <cstddef>
#include <vector>

#include "sl2relax/mat2.hpp"
#include "sl2relax/models.hpp"
#include "sl2relax/scalar_fun.hpp"

namespace sl2relax {

// Rank-one direction H = u (x) v that preserves the determinant along
// F + s H. For rank-one H, det(F + sH) = det F + s <cof F, H> (the s^2 term
// carries det H = 0), so determinant preservation is exactly the tangency
// condition <cof F, H> = u^T (cof F) v = 0, solved in closed form by taking
// v perpendicular to (cof F)^T u. ||H|| = ||u|| ||v|| = 1.
struct TangentDirection {
  double u1, u2;
  double v1, v2;
  Mat2 H;
};

// Directions for angles alpha_j = j pi / count, j = 0..count-1.
std::vector<TangentDirection> tangent_directions(const Mat2& F, std::size_t count);

struct LaminationParams {
  std::size_t directions_per_point = 8;
  std::size_t s_samples = 33;  // per sign
  double s_max = 0.0;          // 0 picks half the gap grid span
};

// Matrix-level oracle state: per-iteration value lists over a nonnegative
// gap grid. Iteration 0 is the raw profile; passes only ever lower values.
struct LaminationTable {
  Grid gap_grid;
  std::vector<std::vector<double>> values_per_iteration;
  std::vector<double> max_delta_history;
  bool converged = false;
};

LaminationTable make_lamination_table(const EnergyModel& model, const Grid& gap_grid);

// One improvement pass. Each grid gap t gets the diagonal representative F;
// candidate values mix the previous iteration (linearly interpolated) at the
// gaps of F + s-H and F + s+H with the weights that reconstruct F. Mixtures
// reaching beyond the grid are discarded rather than clamped: clamping would
// inject fictitious low values from outside the trusted domain.
LaminationTable laminate_once(const LaminationTable& table,
                              const LaminationParams& params = {});

// Iterates laminate_once until the max pointwise change drops to tol or
// max_iters passes have run; records the delta history and convergence flag.
LaminationTable lamination_fixed_point(const EnergyModel& model, const Grid& gap_grid,
                                       std::size_t max_iters, double tol,
                                       const LaminationParams& params = {});

}  // namespace sl2relax
