#include "sl2relax/scalar_fun.hpp"

#include <cmath>
#include <utility>

namespace sl2relax {

double ScalarFn::operator()(double t) const {
  if (domain == DomainKind::half_line && t < 0.0)
    throw EvalError("profile '" + label + "' is defined on [0, inf) only", t);
  const double v = evaluator(t);
  if (!std::isfinite(v)) throw EvalError("profile '" + label + "' is non-finite", t);
  return v;
}

ScalarFn symmetrize(const ScalarFn& phi) {
  if (phi.domain != DomainKind::half_line)
    throw DomainError("symmetrize expects a half-line profile");
  ScalarFn even;
  even.evaluator = [inner = phi.evaluator](double t) { return inner(std::fabs(t)); };
  even.domain = DomainKind::full_line;
  even.label = phi.label.empty() ? "even extension" : phi.label + " (even extension)";
  return even;
}

Grid::Grid(std::vector<double> points) : pts_(std::move(points)) {
  if (pts_.size() < 3) throw BadGrid("grid needs at least 3 points");
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (!std::isfinite(pts_[i])) throw BadGrid("grid point " + std::to_string(i) + " is not finite");
    if (i > 0 && !(pts_[i - 1] < pts_[i]))
      throw BadGrid("grid is not strictly increasing at index " + std::to_string(i));
  }
}

Grid uniform_grid(double t_min, double t_max, std::size_t n) {
  if (!(t_min < t_max)) throw BadGrid("grid range is empty");
  if (n < 3) throw BadGrid("grid needs at least 3 points");
  std::vector<double> pts(n);
  const double span = t_max - t_min;
  // i*span/(n-1) keeps symmetric ranges exactly symmetric (e.g. midpoint 0).
  for (std::size_t i = 0; i < n; ++i)
    pts[i] = t_min + (static_cast<double>(i) * span) / static_cast<double>(n - 1);
  pts.back() = t_max;
  return Grid(std::move(pts));
}

Grid geometric_grid(double t_peak, double t_max, std::size_t n) {
  if (!(t_peak > 0.0) || !(t_peak < t_max)) throw BadGrid("need 0 < t_peak < t_max");
  if (n < 5 || n % 2 == 0) throw BadGrid("geometric grid needs an odd point count >= 5");
  const std::size_t per_side = (n - 1) / 2;
  const std::size_t core = (per_side + 1) / 2;
  const std::size_t tail = per_side - core;
  std::vector<double> half;
  half.reserve(per_side);
  for (std::size_t i = 1; i <= core; ++i)
    half.push_back((static_cast<double>(i) * t_peak) / static_cast<double>(core));
  const double ratio = std::pow(t_max / t_peak, 1.0 / static_cast<double>(tail));
  for (std::size_t i = 1; i <= tail; ++i)
    half.push_back(t_peak * std::pow(ratio, static_cast<double>(i)));
  half.back() = t_max;
  std::vector<double> pts;
  pts.reserve(n);
  for (std::size_t i = per_side; i-- > 0;) pts.push_back(-half[i]);
  pts.push_back(0.0);
  for (double v : half) pts.push_back(v);
  return Grid(std::move(pts));
}

SampledFn::SampledFn(Grid grid_, std::vector<double> values_)
    : grid(std::move(grid_)), values(std::move(values_)) {
  if (grid.size() != values.size()) throw BadGrid("sample count does not match grid size");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      throw EvalError("sampled value is non-finite", grid[i]);
}

SampledFn sample(const ScalarFn& fn, const Grid& grid) {
  std::vector<double> values;
  values.reserve(grid.size());
  for (double t : grid.points()) values.push_back(fn(t));
  return SampledFn(grid, std::move(values));
}

}  // namespace sl2relax
