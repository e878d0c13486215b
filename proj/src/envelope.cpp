#include "sl2relax/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sl2relax/errors.hpp"
#include "sl2relax/kernels.hpp"

namespace sl2relax {

namespace {

double cross(const double* ts, const double* fs, std::size_t a, std::size_t b,
             std::size_t c) {
  return (ts[b] - ts[a]) * (fs[c] - fs[a]) - (fs[b] - fs[a]) * (ts[c] - ts[a]);
}

// Monotone-chain lower hull of points already sorted by t. cross <= 0 pops
// collinear middles too, so the vertex set is minimal.
std::vector<std::size_t> lower_hull(const double* ts, const double* fs,
                                    std::size_t n) {
  std::vector<std::size_t> hull;
  hull.reserve(64);
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2 &&
           cross(ts, fs, hull[hull.size() - 2], hull.back(), i) <= 0.0)
      hull.pop_back();
    hull.push_back(i);
  }
  return hull;
}

double secant(const double* ts, const double* fs, std::size_t a, std::size_t b) {
  return (fs[b] - fs[a]) / (ts[b] - ts[a]);
}

// One-sided at the ends, centered inside. Used only for bridge residuals.
double fd_slope(const double* ts, const double* fs, std::size_t n, std::size_t i) {
  const std::size_t lo = i == 0 ? 0 : i - 1;
  const std::size_t hi = i + 1 == n ? i : i + 1;
  return (fs[hi] - fs[lo]) / (ts[hi] - ts[lo]);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// Envelope values at every grid point: source value at vertices, chord
// interpolation between them. The expression f0 + (t - t0) * slope matches
// the chord oracle's, which keeps the two within rounding of each other.
std::vector<double> envelope_values(const double* ts, const double* fs,
                                    const std::vector<std::size_t>& hull,
                                    std::size_t n) {
  std::vector<double> env(n);
  for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
    const std::size_t a = hull[v];
    const std::size_t b = hull[v + 1];
    env[a] = fs[a];
    const double slope = secant(ts, fs, a, b);
    for (std::size_t i = a + 1; i < b; ++i)
      env[i] = fs[a] + (ts[i] - ts[a]) * slope;
  }
  env[hull.back()] = fs[hull.back()];
  return env;
}

// A hull segment is a bridge when it skips grid points and the source sits
// strictly above the chord at one of them; numerically collinear runs (the
// hull drops their middles too) are not bridges.
std::vector<Bridge> bridges_from_hull(const double* ts, const double* fs,
                                      const std::vector<std::size_t>& hull,
                                      const std::vector<double>& env,
                                      std::size_t n, double tol) {
  std::vector<Bridge> out;
  for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
    const std::size_t a = hull[v];
    const std::size_t b = hull[v + 1];
    if (b - a < 2) continue;
    double excess = 0.0;
    for (std::size_t i = a + 1; i < b; ++i)
      excess = std::max(excess, fs[i] - env[i]);
    if (excess <= tol) continue;
    const double slope = secant(ts, fs, a, b);
    const double residual = std::max(std::fabs(fd_slope(ts, fs, n, a) - slope),
                                     std::fabs(fd_slope(ts, fs, n, b) - slope));
    out.push_back({ts[a], ts[b], slope, residual});
  }
  return out;
}

double collinearity_tol(const std::vector<double>& values) {
  return 1e-9 * std::max(1.0, max_abs(values));
}

}  // namespace

PiecewiseEnvelope::PiecewiseEnvelope(SampledFn source,
                                     std::vector<HullVertex> vertices,
                                     std::vector<double> values,
                                     std::vector<Bridge> bridges,
                                     double left_tail_slope,
                                     double right_tail_slope)
    : source_(std::move(source)),
      vertices_(std::move(vertices)),
      values_(std::move(values)),
      bridges_(std::move(bridges)),
      left_tail_slope_(left_tail_slope),
      right_tail_slope_(right_tail_slope) {}

double PiecewiseEnvelope::value_at(double t) const {
  const HullVertex& first = vertices_.front();
  const HullVertex& last = vertices_.back();
  if (t <= first.t) return first.value + (t - first.t) * left_tail_slope_;
  if (t >= last.t) return last.value + (t - last.t) * right_tail_slope_;
  std::size_t lo = 0;
  std::size_t hi = vertices_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (vertices_[mid].t <= t ? lo : hi) = mid;
  }
  const HullVertex& a = vertices_[lo];
  const HullVertex& b = vertices_[hi];
  const double slope = (b.value - a.value) / (b.t - a.t);
  return a.value + (t - a.t) * slope;
}

PiecewiseEnvelope convex_envelope_grid(const SampledFn& f) {
  const double* ts = f.grid.points().data();
  const double* fs = f.values.data();
  const std::size_t n = f.grid.size();

  const std::vector<std::size_t> hull = lower_hull(ts, fs, n);
  std::vector<double> env = envelope_values(ts, fs, hull, n);
  std::vector<Bridge> bridges =
      bridges_from_hull(ts, fs, hull, env, n, collinearity_tol(f.values));

  std::vector<HullVertex> vertices;
  vertices.reserve(hull.size());
  for (std::size_t i : hull) vertices.push_back({ts[i], fs[i], i});

  const double left = secant(ts, fs, hull[0], hull[1]);
  const double right = secant(ts, fs, hull[hull.size() - 2], hull.back());
  return PiecewiseEnvelope(f, std::move(vertices), std::move(env),
                           std::move(bridges), left, right);
}

PiecewiseEnvelope monotone_convex_envelope(const SampledFn& phi) {
  if (phi.grid.front() < 0.0) throw NegativeGridPoint(phi.grid.front());

  const std::vector<double>& ts = phi.grid.points();
  const std::vector<double>& fs = phi.values;
  const std::size_t n = phi.grid.size();

  // Even reflection. Negation is exact, so the mirrored data is even bit for
  // bit and the hull's straddling segment gets slope exactly 0.
  std::vector<double> mts, mfs;
  mts.reserve(2 * n);
  mfs.reserve(2 * n);
  for (std::size_t i = n; i-- > 0;) {
    if (ts[i] == 0.0) continue;  // only possible at i = 0
    mts.push_back(-ts[i]);
    mfs.push_back(fs[i]);
  }
  const std::size_t offset = mts.size();
  mts.insert(mts.end(), ts.begin(), ts.end());
  mfs.insert(mfs.end(), fs.begin(), fs.end());

  const std::vector<std::size_t> hull = lower_hull(mts.data(), mfs.data(), mts.size());

  // Restriction to the original grid: keep vertices at t >= grid.front().
  std::vector<HullVertex> vertices;
  std::size_t first_kept = hull.size();
  for (std::size_t v = 0; v < hull.size(); ++v) {
    if (hull[v] < offset) continue;
    if (first_kept == hull.size()) first_kept = v;
    vertices.push_back({mts[hull[v]], mfs[hull[v]], hull[v] - offset});
  }

  // Left tail: the mirrored hull's slope arriving at the restriction point,
  // i.e. the straddling segment's slope when grid.front() is not a vertex
  // (exactly 0 for even data) and the incoming segment's otherwise. The
  // mirrored hull always keeps its leftmost (negative) point, so a
  // predecessor exists.
  const double left_tail =
      secant(mts.data(), mfs.data(), hull[first_kept - 1], hull[first_kept]);
  const double right_tail =
      secant(mts.data(), mfs.data(), hull[hull.size() - 2], hull.back());

  // Grid values: tail extrapolation left of the first kept vertex (flat for
  // even data), chord interpolation between kept vertices.
  std::vector<double> env(n);
  const HullVertex& v0 = vertices.front();
  for (std::size_t i = 0; i < v0.source_index; ++i)
    env[i] = v0.value + (ts[i] - v0.t) * left_tail;
  for (std::size_t v = 0; v + 1 < vertices.size(); ++v) {
    const std::size_t a = vertices[v].source_index;
    const std::size_t b = vertices[v + 1].source_index;
    env[a] = fs[a];
    const double slope = secant(ts.data(), fs.data(), a, b);
    for (std::size_t i = a + 1; i < b; ++i)
      env[i] = fs[a] + (ts[i] - ts[a]) * slope;
  }
  env[vertices.back().source_index] = fs[vertices.back().source_index];

  const double tol = collinearity_tol(fs);
  std::vector<Bridge> bridges;
  // Clipped piece of a straddling bridge, reported from grid.front() on.
  if (v0.source_index > 0) {
    double excess = 0.0;
    for (std::size_t i = 0; i < v0.source_index; ++i)
      excess = std::max(excess, fs[i] - env[i]);
    if (excess > tol) {
      const double residual =
          std::max(std::fabs(fd_slope(ts.data(), fs.data(), n, 0) - left_tail),
                   std::fabs(fd_slope(ts.data(), fs.data(), n, v0.source_index) -
                             left_tail));
      bridges.push_back({ts[0], v0.t, left_tail, residual});
    }
  }
  for (std::size_t v = 0; v + 1 < vertices.size(); ++v) {
    const std::size_t a = vertices[v].source_index;
    const std::size_t b = vertices[v + 1].source_index;
    if (b - a < 2) continue;
    double excess = 0.0;
    for (std::size_t i = a + 1; i < b; ++i)
      excess = std::max(excess, fs[i] - env[i]);
    if (excess <= tol) continue;
    const double slope = secant(ts.data(), fs.data(), a, b);
    const double residual =
        std::max(std::fabs(fd_slope(ts.data(), fs.data(), n, a) - slope),
                 std::fabs(fd_slope(ts.data(), fs.data(), n, b) - slope));
    bridges.push_back({ts[a], ts[b], slope, residual});
  }

  return PiecewiseEnvelope(phi, std::move(vertices), std::move(env),
                           std::move(bridges), left_tail, right_tail);
}

std::vector<double> chord_envelope_oracle(const SampledFn& f) {
  const double* ts = f.grid.points().data();
  const std::size_t n = f.grid.size();
  std::vector<double> env = f.values;  // j = i = k chords
  std::vector<double> slopes(n);

  // For a fixed left endpoint j, min over k >= i of the chord value at t_i
  // is attained by the smallest secant slope among k >= i (t_i >= t_j), so a
  // right-to-left suffix minimum turns the inner double loop into two passes.
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t m = n - 1 - j;
    kernels::secant_slopes(ts + j + 1, f.values.data() + j + 1, m, ts[j],
                           f.values[j], slopes.data());
    for (std::size_t i = m - 1; i-- > 0;)
      slopes[i] = std::min(slopes[i], slopes[i + 1]);
    kernels::chord_min_update(env.data() + j + 1, ts + j + 1, slopes.data(), m,
                              ts[j], f.values[j]);
  }
  return env;
}

SampledFn legendre_transform(const SampledFn& f, const Grid& slopes) {
  std::vector<double> out(slopes.size());
  for (std::size_t i = 0; i < slopes.size(); ++i)
    out[i] = kernels::conjugate_max(f.grid.points().data(), f.values.data(),
                                    f.grid.size(), slopes[i]);
  return SampledFn(slopes, std::move(out));
}

Grid biconjugate_slopes(const SampledFn& f) {
  const double* ts = f.grid.points().data();
  const double* fs = f.values.data();
  const std::vector<std::size_t> hull = lower_hull(ts, fs, f.grid.size());

  std::vector<double> slopes;
  slopes.reserve(hull.size() + 1);
  for (std::size_t v = 0; v + 1 < hull.size(); ++v) {
    const double s = secant(ts, fs, hull[v], hull[v + 1]);
    // Hull slopes increase strictly in exact arithmetic; rounding can still
    // produce ties, which add nothing to the transform.
    if (slopes.empty() || s > slopes.back()) slopes.push_back(s);
  }
  slopes.insert(slopes.begin(), slopes.front() - 1.0);
  slopes.push_back(slopes.back() + 1.0);
  return Grid(std::move(slopes));
}

SampledFn biconjugate(const SampledFn& f) {
  const SampledFn conj = legendre_transform(f, biconjugate_slopes(f));
  return legendre_transform(conj, f.grid);
}

std::vector<Bridge> extract_bridges(const PiecewiseEnvelope& env) {
  return env.bridges();
}

TailReport tail_report(const PiecewiseEnvelope& env) {
  const std::vector<double>& ts = env.source().grid.points();
  const std::vector<double>& fs = env.source().values;
  const std::size_t n = ts.size();
  const std::size_t window = std::max<std::size_t>(3, n / 10);

  // Secant magnitudes still shrinking toward a boundary mean the grid is
  // truncating the tangent chords the true envelope would use.
  const auto shrinking = [&](std::size_t inner, std::size_t outer) {
    const double si = std::fabs((fs[inner + 1] - fs[inner]) / (ts[inner + 1] - ts[inner]));
    const double so = std::fabs((fs[outer + 1] - fs[outer]) / (ts[outer + 1] - ts[outer]));
    return so < si * (1.0 - 1e-9);
  };
  const bool left = shrinking(window - 2, 0);
  const bool right = shrinking(n - window, n - 2);

  return {env.left_tail_slope(), env.right_tail_slope(), left || right};
}

}  // namespace sl2relax
