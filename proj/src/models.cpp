#include "sl2relax/models.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "sl2relax/errors.hpp"
#include "sl2relax/expr.hpp"

namespace sl2relax {

EnergyModel adm(double gamma) {
  const double c2 = 4.0 - 2.0 * gamma;
  const double c0 = 4.0 - 4.0 * gamma;
  auto profile = [c2, c0](double t) {
    const double t2 = t * t;
    return (t2 + c2) * t2 + c0;
  };

  EnergyModel m;
  m.name = "adm";
  m.phi_tilde = {profile, DomainKind::full_line, "adm profile"};
  m.phi = {profile, DomainKind::half_line, "adm profile"};
  if (gamma > 2.0) {
    const double well = gamma - 2.0;
    const double floor_value = -gamma * gamma;
    m.closed_form_envelope =
        ScalarFn{[profile, well, floor_value](double t) {
                   return t * t < well ? floor_value : profile(t);
                 },
                 DomainKind::full_line, "adm envelope"};
  } else {
    m.closed_form_envelope = m.phi_tilde;
  }
  m.parameters["gamma"] = gamma;
  m.bounded_below_hint = true;
  return m;
}

EnergyModel hencky() {
  auto profile = [](double t) {
    const double lmax = 0.5 * (std::fabs(t) + std::sqrt(4.0 + t * t));
    const double lg = std::log(lmax);
    return 2.0 * lg * lg;
  };

  EnergyModel m;
  m.name = "hencky";
  m.phi_tilde = {profile, DomainKind::full_line, "hencky profile"};
  m.phi = {profile, DomainKind::half_line, "hencky profile"};
  m.closed_form_envelope = ScalarFn{[](double) { return 0.0; },
                                    DomainKind::full_line, "hencky envelope"};
  m.closed_form_is_asymptotic = true;
  m.bounded_below_hint = true;
  return m;
}

EnergyModel from_expression(const std::string& source, const std::string& name) {
  ExprPtr ast = parse_expr(source);
  auto evaluator = [ast](double t) { return eval_expr(ast, t); };

  // Evenness probe on seeded points. An expression that cannot even be
  // evaluated at -t is not even either.
  std::mt19937 rng(20230417u);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  for (int i = 0; i < 64; ++i) {
    const double t = dist(rng);
    const double plus = evaluator(t);  // EvalError propagates
    double minus;
    try {
      minus = evaluator(-t);
    } catch (const EvalError&) {
      throw NotEven("expression is not even in t: undefined at t = " +
                    std::to_string(-t));
    }
    if (!(std::fabs(plus - minus) <= 1e-12 * std::max(1.0, std::fabs(plus))))
      throw NotEven("expression is not even in t: f(t) != f(-t) at t = " +
                    std::to_string(t));
  }

  EnergyModel m;
  m.name = name;
  m.phi_tilde = {evaluator, DomainKind::full_line, name};
  m.phi = {std::move(evaluator), DomainKind::half_line, name};
  return m;
}

double energy_at(const EnergyModel& model, const Mat2& F) {
  return model.phi_tilde(gap(F));
}

}  // namespace sl2relax
