#include "sl2relax/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sl2relax/errors.hpp"
#include "sl2relax/kernels.hpp"

namespace sl2relax {

namespace {

// Large finite sentinel marking a gap outside the grid; candidates built
// from it lose every min and stay finite (unlike inf, which would turn a
// 0 * inf mixing weight into NaN).
constexpr double kDiscard = 1e300;

double interp_or_discard(const std::vector<double>& ts,
                         const std::vector<double>& vals, double x) {
  if (x < ts.front() || x > ts.back()) return kDiscard;
  std::size_t lo = 0;
  std::size_t hi = ts.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (ts[mid] <= x ? lo : hi) = mid;
  }
  const double slope = (vals[hi] - vals[lo]) / (ts[hi] - ts[lo]);
  return vals[lo] + (x - ts[lo]) * slope;
}

}  // namespace

std::vector<TangentDirection> tangent_directions(const Mat2& F, std::size_t count) {
  assert_sl2(F);
  const Mat2 cof = cofactor(F);

  std::vector<TangentDirection> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double alpha = std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(count);
    const double u1 = std::cos(alpha);
    const double u2 = std::sin(alpha);
    // w = (cof F)^T u; never zero since cof F is invertible on SL(2)
    const double w1 = cof.a11 * u1 + cof.a21 * u2;
    const double w2 = cof.a12 * u1 + cof.a22 * u2;
    const double nw = std::sqrt(w1 * w1 + w2 * w2);
    const double v1 = -w2 / nw;
    const double v2 = w1 / nw;
    out.push_back(
        {u1, u2, v1, v2, Mat2{u1 * v1, u1 * v2, u2 * v1, u2 * v2}});
  }
  return out;
}

LaminationTable make_lamination_table(const EnergyModel& model, const Grid& gap_grid) {
  if (gap_grid.front() < 0.0) throw NegativeGridPoint(gap_grid.front());
  SampledFn samples = sample(model.phi_tilde, gap_grid);
  return {gap_grid, {std::move(samples.values)}, {}, false};
}

LaminationTable laminate_once(const LaminationTable& table,
                              const LaminationParams& params) {
  const Grid& grid = table.gap_grid;
  const std::vector<double>& ts = grid.points();
  const std::vector<double>& prev = table.values_per_iteration.back();
  const std::size_t n = grid.size();
  const std::size_t S = params.s_samples;
  const double s_max = params.s_max > 0.0 ? params.s_max : 0.5 * grid.span();

  std::vector<double> svals(S);
  for (std::size_t j = 0; j < S; ++j)
    svals[j] = s_max * static_cast<double>(j + 1) / static_cast<double>(S);

  // mu[i][j] reconstructs F from the points at s- = -svals[i], s+ = svals[j]
  std::vector<double> mu(S * S);
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = 0; j < S; ++j)
      mu[i * S + j] = svals[i] / (svals[i] + svals[j]);

  std::vector<double> next(n);
  std::vector<double> r_neg(S), r_pos(S);
  for (std::size_t g = 0; g < n; ++g) {
    const double t = ts[g];
    const Mat2 F = representative(t);
    const double t2 = t * t;
    double best = prev[g];
    for (const TangentDirection& dir :
         tangent_directions(F, params.directions_per_point)) {
      const double c = inner(F, dir.H);
      // gap^2(F + sH) = t^2 + 2 s <F, H> + s^2 for unit tangent H; the
      // quadratic is nonnegative (|<F, H>| <= t on SL(2)), clamped anyway.
      for (std::size_t i = 0; i < S; ++i) {
        const double s = svals[i];
        const double gm = std::sqrt(std::max(t2 - 2.0 * s * c + s * s, 0.0));
        const double gp = std::sqrt(std::max(t2 + 2.0 * s * c + s * s, 0.0));
        r_neg[i] = interp_or_discard(ts, prev, gm);
        r_pos[i] = interp_or_discard(ts, prev, gp);
      }
      const double cand =
          kernels::mix_min(r_neg.data(), S, r_pos.data(), S, mu.data());
      best = std::min(best, cand);
    }
    next[g] = best;
  }

  double delta = 0.0;
  for (std::size_t g = 0; g < n; ++g) delta = std::max(delta, prev[g] - next[g]);

  LaminationTable out = table;
  out.values_per_iteration.push_back(std::move(next));
  out.max_delta_history.push_back(delta);
  return out;
}

LaminationTable lamination_fixed_point(const EnergyModel& model, const Grid& gap_grid,
                                       std::size_t max_iters, double tol,
                                       const LaminationParams& params) {
  LaminationTable table = make_lamination_table(model, gap_grid);
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    table = laminate_once(table, params);
    if (table.max_delta_history.back() <= tol) {
      table.converged = true;
      break;
    }
  }
  return table;
}

}  // namespace sl2relax
