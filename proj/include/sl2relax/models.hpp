#pragma once

#include <map>
#include <optional>
#include <string>

#include "sl2relax/mat2.hpp"
#include "sl2relax/scalar_fun.hpp"

namespace sl2relax {

// Objective isotropic incompressible energy reduced to its gap profile:
// W(F) = phi_tilde(gap(F)), with phi the restriction to t >= 0. Both views
// share one evaluator, so they agree bit for bit where both are defined.
struct EnergyModel {
  std::string name;
  ScalarFn phi_tilde;  // full line, even
  ScalarFn phi;        // half line
  std::optional<ScalarFn> closed_form_envelope;
  // The closed form is a limit statement on all of R, not a value any finite
  // grid attains (Hencky); compare via domain-growth trends, not tolerances.
  bool closed_form_is_asymptotic = false;
  std::map<std::string, double> parameters;
  // Known bounded below; relaxation skips its unboundedness heuristic.
  bool bounded_below_hint = false;
};

// ||F||^4 - 2 gamma ||F||^2 as a gap profile: t^4 + (4-2g) t^2 + 4 - 4g.
// Convex exactly for gamma <= 2; above that the envelope flattens to
// -gamma^2 on t^2 < gamma - 2 and the closed form records the piecewise
// formula. For gamma <= 2 the closed form is the profile itself.
EnergyModel adm(double gamma);

// ||log V||^2 as a gap profile: 2 log^2((|t| + sqrt(4 + t^2)) / 2). The
// envelope is identically 0, but only in the unbounded-domain limit; the
// stored closed form carries the asymptotic marker.
EnergyModel hencky();

// User-defined profile from an expression in t. Must be even (probed on
// seeded sample points); no closed-form envelope.
EnergyModel from_expression(const std::string& source, const std::string& name);

// phi_tilde(gap(F)); F must be in SL(2).
double energy_at(const EnergyModel& model, const Mat2& F);

}  // namespace sl2relax
