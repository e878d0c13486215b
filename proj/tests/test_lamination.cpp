#include <doctest.h>

#include <cmath>

#include "sl2relax/envelope.hpp"
#include "sl2relax/errors.hpp"
#include "sl2relax/lamination.hpp"
#include "sl2relax/models.hpp"

using namespace sl2relax;

namespace {

Mat2 step(const Mat2& f, const Mat2& h, double s) {
  return {f.a11 + s * h.a11, f.a12 + s * h.a12,
          f.a21 + s * h.a21, f.a22 + s * h.a22};
}

}  // namespace

TEST_CASE("tangent directions") {
  const Mat2 f{2, 0, 0, 0.5};
  const auto dirs = tangent_directions(f, 4);
  REQUIRE(dirs.size() == 4);

  // alpha = 0: u = e1, (cof F)^T u points along e1, so v = e2
  CHECK(dirs[0].u1 == 1.0);
  CHECK(dirs[0].u2 == 0.0);
  CHECK(dirs[0].v1 == 0.0);
  CHECK(dirs[0].v2 == 1.0);
  CHECK(dirs[0].H.a11 == 0.0);
  CHECK(dirs[0].H.a12 == 1.0);
  CHECK(dirs[0].H.a21 == 0.0);
  CHECK(dirs[0].H.a22 == 0.0);

  for (const TangentDirection& d : dirs) {
    CHECK(frobenius_norm_sq(d.H) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(det(d.H) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(inner(cofactor(f), d.H) == doctest::Approx(0.0).epsilon(1e-12));
  }

  for (const TangentDirection& d : tangent_directions(Mat2{1, 0, 0, 1}, 4)) {
    CHECK(det(step(Mat2{1, 0, 0, 1}, d.H, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(det(step(Mat2{1, 0, 0, 1}, d.H, -1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS((void)tangent_directions(Mat2{2, 0, 0, 1}, 4), NotSpecialLinear);
}

TEST_CASE("seeding the table") {
  const EnergyModel m = adm(3.0);
  const Grid g = uniform_grid(0.0, 4.0, 201);
  const LaminationTable t = make_lamination_table(m, g);
  CHECK(t.gap_grid.size() == 201);
  REQUIRE(t.values_per_iteration.size() == 1);
  const SampledFn f = sample(m.phi_tilde, g);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(t.values_per_iteration[0][i] == f.values[i]);
  CHECK(t.max_delta_history.empty());
  CHECK_FALSE(t.converged);

  CHECK_THROWS_AS((void)make_lamination_table(m, uniform_grid(-1.0, 1.0, 11)),
                  NegativeGridPoint);
}

TEST_CASE("one pass lowers the nonconvex well") {
  const LaminationTable t0 = make_lamination_table(adm(3.0), uniform_grid(0.0, 4.0, 201));
  const LaminationTable t1 = laminate_once(t0);
  REQUIRE(t1.values_per_iteration.size() == 2);
  const std::vector<double>& v0 = t1.values_per_iteration[0];
  const std::vector<double>& v1 = t1.values_per_iteration[1];
  CHECK(v1[0] < -8.0);  // the well at gap 0 gets bridged immediately
  for (std::size_t i = 0; i < v0.size(); ++i) CHECK(v1[i] <= v0[i]);
  REQUIRE(t1.max_delta_history.size() == 1);
  CHECK(t1.max_delta_history[0] > 0.0);

  const LaminationTable t2 = laminate_once(t1);
  const std::vector<double>& v2 = t2.values_per_iteration[2];
  for (std::size_t i = 0; i < v1.size(); ++i) CHECK(v2[i] <= v1[i]);
  CHECK(t2.max_delta_history[1] < t2.max_delta_history[0]);
}

TEST_CASE("mixtures stay on the constraint surface") {
  const std::size_t S = 33;
  const double s_max = 2.0;
  for (double t : {0.5, 1.5, 3.0}) {
    const Mat2 f = representative(t);
    for (const TangentDirection& d : tangent_directions(f, 8)) {
      for (std::size_t j = 0; j < S; ++j) {
        const double s = s_max * static_cast<double>(j + 1) / static_cast<double>(S);
        CHECK(std::fabs(det(step(f, d.H, s)) - 1.0) <= 1e-10);
        CHECK(std::fabs(det(step(f, d.H, -s)) - 1.0) <= 1e-10);
      }
    }
  }
}

TEST_CASE("gap transport along tangent lines") {
  for (double t : {0.5, 1.5, 3.0}) {
    const Mat2 f = representative(t);
    for (const TangentDirection& d : tangent_directions(f, 8)) {
      const double c = inner(f, d.H);
      for (double s : {0.25, 0.8, 1.6}) {
        for (double sign : {1.0, -1.0}) {
          const Mat2 g = step(f, d.H, sign * s);
          const SingularPair p = singular_values(g);
          const double predicted =
              std::sqrt(std::max(t * t + 2.0 * sign * s * c + s * s, 0.0));
          CHECK(p.sigma_max - p.sigma_min == doctest::Approx(predicted).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("fixed point approaches the scalar envelope") {
  const EnergyModel m = adm(3.0);
  const Grid g = uniform_grid(0.0, 4.0, 201);
  const LaminationTable t = lamination_fixed_point(m, g, 12, 1e-4);
  CHECK(t.converged);

  const PiecewiseEnvelope env = monotone_convex_envelope(sample(m.phi_tilde, g));
  const std::vector<double>& lam = t.values_per_iteration.back();
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(lam[i] <= env.values()[i] + 5e-2);
    CHECK(lam[i] >= env.values()[i] - 1e-9);  // never undershoots the hull
  }
}

TEST_CASE("convex profile is a fixed point") {
  const EnergyModel m = adm(1.5);
  const Grid g = uniform_grid(0.0, 4.0, 201);
  const LaminationTable t = lamination_fixed_point(m, g, 12, 1e-4);
  CHECK(t.converged);
  REQUIRE(t.max_delta_history.size() == 1);
  CHECK(t.max_delta_history[0] == 0.0);
  const std::vector<double>& first = t.values_per_iteration.front();
  const std::vector<double>& last = t.values_per_iteration.back();
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(last[i] == first[i]);
}

TEST_CASE("logarithmic profile levels toward its envelope") {
  const EnergyModel m = hencky();
  const Grid g = uniform_grid(0.0, 6.0, 301);
  const LaminationTable t = lamination_fixed_point(m, g, 12, 1e-4);

  const PiecewiseEnvelope env = monotone_convex_envelope(sample(m.phi_tilde, g));
  const std::vector<double>& lam = t.values_per_iteration.back();
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(lam[i] <= env.values()[i] + 5e-2);
    CHECK(lam[i] >= env.values()[i] - 1e-9);
  }
}

TEST_CASE("wider mixing reach can only lower the table") {
  // s values of the narrow run are bitwise among those of the wide run, so
  // every candidate of the narrow pass is also formed by the wide pass.
  const Grid g = uniform_grid(0.0, 6.0, 301);
  LaminationParams narrow;
  narrow.s_samples = 33;
  narrow.s_max = 1.5;
  LaminationParams wide;
  wide.s_samples = 66;
  wide.s_max = 3.0;

  LaminationTable tn = make_lamination_table(hencky(), g);
  LaminationTable tw = tn;
  for (int k = 0; k < 3; ++k) {
    tn = laminate_once(tn, narrow);
    tw = laminate_once(tw, wide);
  }
  const std::vector<double>& vn = tn.values_per_iteration.back();
  const std::vector<double>& vw = tw.values_per_iteration.back();
  bool strictly_lower_somewhere = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(vw[i] <= vn[i]);
    strictly_lower_somewhere = strictly_lower_somewhere || vw[i] < vn[i];
  }
  CHECK(strictly_lower_somewhere);
}
