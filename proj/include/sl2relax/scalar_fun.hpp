#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sl2relax/errors.hpp"

namespace sl2relax {

enum class DomainKind { half_line, full_line };

// Scalar profile: either phi on [0, inf) or its even extension on R.
// Evaluation rejects non-finite results, so grid consumers never see inf/NaN.
struct ScalarFn {
  std::function<double(double)> evaluator;
  DomainKind domain = DomainKind::full_line;
  std::string label;

  double operator()(double t) const;
};

// Even extension t -> phi(|t|). Evenness is exact: both signs evaluate the
// same argument bit pattern.
ScalarFn symmetrize(const ScalarFn& phi);

// Strictly increasing list of at least 3 finite points.
class Grid {
 public:
  explicit Grid(std::vector<double> points);

  const std::vector<double>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  double front() const { return pts_.front(); }
  double back() const { return pts_.back(); }
  double operator[](std::size_t i) const { return pts_[i]; }
  double span() const { return pts_.back() - pts_.front(); }

 private:
  std::vector<double> pts_;
};

Grid uniform_grid(double t_min, double t_max, std::size_t n);

// Symmetric about 0: uniform spacing on [-t_peak, t_peak], geometric
// stretching out to +-t_max. Covers several decades with few points, which is
// what sublinearly growing profiles need. Requires an odd n >= 5 so the grid
// can contain 0 and stay symmetric.
Grid geometric_grid(double t_peak, double t_max, std::size_t n);

struct SampledFn {
  SampledFn(Grid grid_, std::vector<double> values_);

  Grid grid;
  std::vector<double> values;
};

// Fails fast: the first non-finite or out-of-domain evaluation throws
// EvalError carrying the offending grid point.
SampledFn sample(const ScalarFn& fn, const Grid& grid);

}  // namespace sl2relax
