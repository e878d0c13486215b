#pragma once

#include <cstddef>
#include <vector>

#include "sl2relax/scalar_fun.hpp"

namespace sl2relax {

struct HullVertex {
  double t;
  double value;
  std::size_t source_index;
};

// Maximal affine piece of the envelope lying strictly below the source
// ("Maxwell bridge"). slope_residual reports how far the source's
// finite-difference slopes at the two endpoints are from the bridge slope;
// for a tangent bridge of a smooth source it is O(h).
struct Bridge {
  double t_left;
  double t_right;
  double slope;
  double slope_residual;
};

struct TailReport {
  double left_slope;
  double right_slope;
  // Set when the source's secant slopes over the outer 10% of the grid are
  // still shrinking in magnitude toward a boundary. The true envelope on R
  // may then lie below the grid envelope (the grid truncates the relevant
  // tangent chords), so envelope values should be read as upper bounds.
  bool truncation_warning = false;
};

// Lower convex hull of a sampled profile, stored as the vertex subset plus
// precomputed envelope values at every source grid point. Between vertices
// the envelope is linear; outside the vertex range it extrapolates with the
// tail slopes. Immutable after construction.
class PiecewiseEnvelope {
 public:
  PiecewiseEnvelope(SampledFn source, std::vector<HullVertex> vertices,
                    std::vector<double> values, std::vector<Bridge> bridges,
                    double left_tail_slope, double right_tail_slope);

  const SampledFn& source() const { return source_; }
  const std::vector<HullVertex>& hull_vertices() const { return vertices_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<Bridge>& bridges() const { return bridges_; }
  double left_tail_slope() const { return left_tail_slope_; }
  double right_tail_slope() const { return right_tail_slope_; }

  // Linear interpolation between hull vertices; tail-slope extrapolation
  // outside them (this also covers grid points left of the first vertex,
  // which occur for restricted even-reflection envelopes).
  double value_at(double t) const;

 private:
  SampledFn source_;
  std::vector<HullVertex> vertices_;
  std::vector<double> values_;
  std::vector<Bridge> bridges_;
  double left_tail_slope_;
  double right_tail_slope_;
};

// Lower convex hull via a single monotone-chain pass. Collinear middle
// points are dropped, so the vertex set is minimal and bridge extraction is
// deterministic.
PiecewiseEnvelope convex_envelope_grid(const SampledFn& f);

// Largest nondecreasing convex minorant on a nonnegative grid: reflects the
// sample evenly about 0, hulls the reflection, and restricts to t >= 0.
// Throws NegativeGridPoint if the grid dips below 0.
PiecewiseEnvelope monotone_convex_envelope(const SampledFn& phi);

// O(n^2) reference: value at t_i is the minimum over all chords through
// (t_j, f_j), (t_k, f_k) with j <= i <= k. Exists solely as an independent
// check of convex_envelope_grid; do not use it for real grids.
std::vector<double> chord_envelope_oracle(const SampledFn& f);

// Discrete Legendre-Fenchel transform: g*(s) = max_i (s * t_i - f_i) for
// each slope s. Exact for the piecewise-linear interpolant once the slope
// grid covers the hull's tail slopes.
SampledFn legendre_transform(const SampledFn& f, const Grid& slopes);

// Slope grid that makes the double transform exact for the piecewise-linear
// model: all hull segment slopes, padded by one extra slope on each side.
Grid biconjugate_slopes(const SampledFn& f);

// g** on the source grid via two Legendre transforms; equals the convex
// envelope of the samples up to rounding.
SampledFn biconjugate(const SampledFn& f);

// The envelope's Maxwell bridges (precomputed at construction). Empty for
// convex input.
std::vector<Bridge> extract_bridges(const PiecewiseEnvelope& env);

TailReport tail_report(const PiecewiseEnvelope& env);

}  // namespace sl2relax
