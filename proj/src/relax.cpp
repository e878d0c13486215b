#include "sl2relax/relax.hpp"

#include <algorithm>
#include <cmath>

#include "sl2relax/errors.hpp"

namespace sl2relax {

namespace {

// Heuristic screen for profiles that look unbounded below: the outermost
// secant slopes on one side all point downhill toward the boundary and
// steepen strictly from one to the next. Linear decrease does not trip it
// (its envelope is still finite on the grid); a definitive check from
// samples is impossible.
void guard_bounded_below(const SampledFn& f) {
  const std::vector<double>& ts = f.grid.points();
  const std::vector<double>& fs = f.values;
  const std::size_t n = ts.size();
  const std::size_t window = std::min<std::size_t>(6, n - 1);
  if (window < 3) return;

  auto secant = [&](std::size_t i) {
    return (fs[i + 1] - fs[i]) / (ts[i + 1] - ts[i]);
  };

  bool left = true;
  for (std::size_t i = 0; i < window && left; ++i)
    left = secant(i) > 0.0 && (i == 0 || secant(i) < secant(i - 1));
  bool right = true;
  for (std::size_t i = 0; i < window && right; ++i) {
    const std::size_t k = n - 2 - i;  // walk inward; k + 1 is further out
    right = secant(k) < 0.0 && (i == 0 || secant(k + 1) < secant(k));
  }
  if (left || right)
    throw UnboundedBelowSuspected(
        "sampled profile decreases superlinearly toward the grid boundary; "
        "its envelope would not be trustworthy");
}

double envelope_at_gap(const RelaxedEnergy& rel, double t) {
  if (!rel.options.extrapolate &&
      (t < rel.grid_spec.front() || t > rel.grid_spec.back()))
    throw OutsideGrid(t);
  return rel.envelope.value_at(t);
}

}  // namespace

RelaxedEnergy build_relaxation(const EnergyModel& model, const Grid& grid,
                               RelaxOptions opts) {
  SampledFn samples = sample(model.phi_tilde, grid);
  if (!model.bounded_below_hint) guard_bounded_below(samples);

  const bool monotone = grid.front() >= 0.0;
  PiecewiseEnvelope env = monotone ? monotone_convex_envelope(samples)
                                   : convex_envelope_grid(samples);

  std::optional<double> cf_error;
  if (model.closed_form_envelope) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      worst = std::max(
          worst, std::fabs(env.values()[i] - (*model.closed_form_envelope)(grid[i])));
    cf_error = worst;
  }
  TailReport tails = tail_report(env);

  return {model,
          std::move(env),
          grid,
          monotone ? "monotone_convex_envelope" : "convex_envelope_grid",
          cf_error,
          tails,
          opts};
}

double relaxed_value(const RelaxedEnergy& rel, const Mat2& F) {
  return envelope_at_gap(rel, gap(F));
}

std::vector<ProfileRow> relaxed_profile(const RelaxedEnergy& rel, const Grid& ts) {
  std::vector<ProfileRow> rows;
  rows.reserve(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const double phi = rel.model.phi_tilde(t);
    const double env = envelope_at_gap(rel, t);
    const bool on_bridge = env < phi - 1e-6 * std::max(1.0, std::fabs(phi));
    rows.push_back({t, phi, env, on_bridge});
  }
  return rows;
}

double extension_value(const EnergyModel& model, const Mat2& F) {
  const double n2 = frobenius_norm_sq(F);
  double radicand = n2 - 2.0 * det(F);
  if (radicand < 0.0) {
    // ||F||^2 >= 2 |det F| for every real F, so only rounding lands here.
    if (radicand > -1e-12 * std::max(1.0, n2)) radicand = 0.0;
    else throw NegativeGap(radicand);
  }
  return model.phi_tilde(std::sqrt(radicand));
}

double extension_envelope_value(const RelaxedEnergy& rel, const Mat2& F) {
  const double radicand =
      std::max(frobenius_norm_sq(F) - 2.0 * det(F), 0.0);
  return envelope_at_gap(rel, std::sqrt(radicand));
}

}  // namespace sl2relax
