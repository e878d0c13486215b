#include "sl2relax/classify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sl2relax/errors.hpp"
#include "sl2relax/kernels.hpp"

namespace sl2relax {

ConvexityCheck is_convex_scalar(const SampledFn& f, double tol) {
  const std::size_t n = f.grid.size();
  std::vector<double> d2(n - 2);
  kernels::divided_second_differences(f.grid.points().data(), f.values.data(),
                                      n, d2.data());
  const kernels::MinResult worst = kernels::argmin(d2.data(), d2.size());
  // witness is the center of the worst triple
  return {worst.value >= -tol, worst.value, f.grid[worst.index + 1]};
}

ConvexityCheck is_nondecreasing(const SampledFn& f, double tol) {
  if (f.grid.front() < 0.0) throw NegativeGridPoint(f.grid.front());
  const std::vector<double>& ts = f.grid.points();
  const std::vector<double>& fs = f.values;

  bool ok = true;
  double worst = fs[1] - fs[0];
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double fd = fs[i + 1] - fs[i];
    if (fd < worst) {
      worst = fd;
      worst_i = i;
    }
    if (fd < -tol * (ts[i + 1] - ts[i])) ok = false;
  }
  return {ok, worst, ts[worst_i]};
}

ClassificationReport classify_energy(const EnergyModel& model, const Grid& grid,
                                     double rel_tol) {
  const SampledFn full = sample(model.phi_tilde, grid);
  double scale = 1.0;
  for (double v : full.values) scale = std::max(scale, std::fabs(v));
  const double tol = rel_tol * scale;

  const ConvexityCheck convex = is_convex_scalar(full, tol);

  std::vector<double> nonneg_ts, nonneg_fs;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0) continue;
    nonneg_ts.push_back(grid[i]);
    nonneg_fs.push_back(full.values[i]);  // phi == phi_tilde for t >= 0
  }
  const SampledFn half(Grid(std::move(nonneg_ts)), std::move(nonneg_fs));
  const ConvexityCheck monotone = is_nondecreasing(half, tol);

  const bool flag = convex.flag && monotone.flag;
  double witness = convex.witness_t;
  if (convex.flag && !monotone.flag) witness = monotone.witness_t;

  return {flag,          flag,
          flag,          flag,
          convex.min_value, monotone.min_value,
          witness,       grid,
          tol};
}

}  // namespace sl2relax
