#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2relax/envelope.hpp"
#include "sl2relax/mat2.hpp"
#include "sl2relax/models.hpp"

namespace sl2relax {

struct RelaxOptions {
  // Evaluate beyond the envelope grid by tail-slope extrapolation instead of
  // throwing OutsideGrid. Off by default: the hull is untrusted out there.
  bool extrapolate = false;
};

// The relaxed energy (all four envelope notions coincide on SL(2)),
// represented by the convex envelope of the gap profile.
struct RelaxedEnergy {
  EnergyModel model;
  PiecewiseEnvelope envelope;  // over the gap variable
  Grid grid_spec;
  std::string algorithm;
  // max |numeric - closed form| over the grid when the model carries a
  // closed-form envelope; for asymptotic closed forms (Hencky) this is the
  // distance to the limit, not an error bound.
  std::optional<double> closed_form_max_error;
  TailReport tails;
  RelaxOptions options;
};

// Samples phi_tilde, hulls it (the monotone-convex variant on nonnegative
// grids), and cross-checks any closed form. Models without the
// bounded-below hint are screened first: sampled values decreasing
// superlinearly toward a boundary raise UnboundedBelowSuspected, since the
// envelope of an unbounded-below energy is meaningless.
RelaxedEnergy build_relaxation(const EnergyModel& model, const Grid& grid,
                               RelaxOptions opts = {});

// Envelope at gap(F); F must be in SL(2). Throws OutsideGrid when the gap
// leaves the grid and extrapolation is off.
double relaxed_value(const RelaxedEnergy& rel, const Mat2& F);

struct ProfileRow {
  double t;
  double phi;       // phi_tilde(t)
  double envelope;  // relaxed value at gap t
  bool on_bridge;   // envelope strictly below the profile
};

// Plot-ready rows at the requested gap values (must lie within the grid).
std::vector<ProfileRow> relaxed_profile(const RelaxedEnergy& rel, const Grid& ts);

// Extension of the energy to arbitrary 2x2 matrices:
// phi_tilde(sqrt(||F||^2 - 2 det F)). Restricted to SL(2) this is the model
// energy. The radicand is nonnegative for every real F; tiny negative
// rounding is clamped.
double extension_value(const EnergyModel& model, const Mat2& F);

// Envelope of the extension at the same argument; restricted to SL(2) this
// equals relaxed_value.
double extension_envelope_value(const RelaxedEnergy& rel, const Mat2& F);

}  // namespace sl2relax
