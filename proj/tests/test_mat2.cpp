#include <doctest.h>

#include <cmath>
#include <random>

#include "sl2relax/mat2.hpp"

using namespace sl2relax;

namespace {

const Mat2 kIdentity{1, 0, 0, 1};
const Mat2 kShear{1, 1, 0, 1};

Mat2 random_sl2(std::mt19937& rng, double max_gap) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> gapd(0.0, max_gap);
  return rotation(angle(rng)) * representative(gapd(rng)) * rotation(angle(rng));
}

// Eigenvalues of F^T F by the quadratic formula; independent of
// singular_values' norm-based route.
SingularPair svd_via_gram(const Mat2& f) {
  const double g11 = f.a11 * f.a11 + f.a21 * f.a21;
  const double g12 = f.a11 * f.a12 + f.a21 * f.a22;
  const double g22 = f.a12 * f.a12 + f.a22 * f.a22;
  const double tr = g11 + g22;
  const double disc = std::sqrt(std::max((g11 - g22) * (g11 - g22) + 4.0 * g12 * g12, 0.0));
  return {std::sqrt(0.5 * (tr + disc)), std::sqrt(std::max(0.5 * (tr - disc), 0.0))};
}

}  // namespace

TEST_CASE("det basics") {
  CHECK(det(kIdentity) == 1.0);
  CHECK(det(Mat2{2, 0, 0, 0.5}) == 1.0);
  CHECK(det(kShear) == 1.0);
  CHECK(det(Mat2{2, 0, 0, 1}) == 2.0);
}

TEST_CASE("frobenius_norm_sq basics") {
  CHECK(frobenius_norm_sq(kIdentity) == 2.0);
  CHECK(frobenius_norm_sq(Mat2{2, 0, 0, 0.5}) == 4.25);
  CHECK(frobenius_norm_sq(kShear) == 3.0);
}

TEST_CASE("assert_sl2 accepts det 1 and rejects det 2") {
  CHECK_NOTHROW(assert_sl2(kIdentity));
  CHECK_NOTHROW(assert_sl2(Mat2{2, 0, 0, 0.5}));
  CHECK_THROWS_AS(assert_sl2(Mat2{2, 0, 0, 1}), NotSpecialLinear);
  try {
    assert_sl2(Mat2{2, 0, 0, 1});
  } catch (const NotSpecialLinear& e) {
    CHECK(e.det_value == 2.0);
  }
  const double nan = std::nan("");
  CHECK_THROWS_AS(assert_sl2(Mat2{nan, 0, 0, 1}), NotSpecialLinear);
}

TEST_CASE("singular_values on diagonal and shear") {
  const SingularPair d = singular_values(Mat2{2, 0, 0, 0.5});
  CHECK(d.sigma_max == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(d.sigma_min == doctest::Approx(0.5).epsilon(1e-14));

  const SingularPair i = singular_values(kIdentity);
  CHECK(i.sigma_max == 1.0);
  CHECK(i.sigma_min == 1.0);

  // Unit shear: sigma_max is the golden ratio.
  const SingularPair s = singular_values(kShear);
  CHECK(s.sigma_max == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  CHECK(s.sigma_max * s.sigma_min == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.sigma_max * s.sigma_max + s.sigma_min * s.sigma_min ==
        doctest::Approx(3.0).epsilon(1e-14));

  CHECK_THROWS_AS(singular_values(Mat2{1, 0, 0, -1}), NonPositiveDeterminant);
  CHECK_THROWS_AS(singular_values(Mat2{1, 0, 0, 0}), NonPositiveDeterminant);
}

TEST_CASE("gap on simple matrices") {
  CHECK(gap(Mat2{2, 0, 0, 0.5}) == 1.5);
  CHECK(gap(kIdentity) == 0.0);
  CHECK(gap(kShear) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(gap(Mat2{2, 0, 0, 1}), NotSpecialLinear);
}

TEST_CASE("lambda_from_gap") {
  const SingularPair z = lambda_from_gap(0.0);
  CHECK(z.sigma_max == 1.0);
  CHECK(z.sigma_min == 1.0);

  // sqrt(4 + 1.5^2) = 2.5, so the pair is (2, 0.5).
  const SingularPair p = lambda_from_gap(1.5);
  CHECK(p.sigma_max == 2.0);
  CHECK(p.sigma_min == 0.5);

  const SingularPair g = lambda_from_gap(1.0);
  CHECK(g.sigma_max == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  CHECK(g.sigma_max * g.sigma_min == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g.sigma_max - g.sigma_min == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(lambda_from_gap(-0.1), NegativeGap);
}

TEST_CASE("representative round trip") {
  const Mat2 r0 = representative(0.0);
  CHECK(r0.a11 == 1.0);
  CHECK(r0.a22 == 1.0);
  CHECK(r0.a12 == 0.0);

  const Mat2 r15 = representative(1.5);
  CHECK(r15.a11 == 2.0);
  CHECK(r15.a22 == 0.5);

  const Mat2 r3 = representative(3.0);
  CHECK(r3.a11 == doctest::Approx((3.0 + std::sqrt(13.0)) / 2.0).epsilon(1e-14));
  CHECK(r3.a22 == doctest::Approx((std::sqrt(13.0) - 3.0) / 2.0).epsilon(1e-14));

  for (double t = 0.0; t <= 100.0; t += 0.5)
    CHECK(gap(representative(t), 1e-6) == doctest::Approx(t).epsilon(1e-12));
}

TEST_CASE("rotation and inverse") {
  const Mat2 r = rotation(0.7);
  CHECK(det(r) == doctest::Approx(1.0).epsilon(1e-15));
  const Mat2 ri = r * rotation(-0.7);
  CHECK(ri.a11 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ri.a12 == doctest::Approx(0.0).epsilon(1e-15));

  const Mat2 f{3, 1, 2, 1};
  const Mat2 fi = inverse(f);
  const Mat2 p = f * fi;
  CHECK(p.a11 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.a22 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(p.a12) < 1e-14);
  CHECK_THROWS_AS(inverse(Mat2{1, 1, 1, 1}), NonPositiveDeterminant);
}

TEST_CASE("cofactor gives the first-order determinant change") {
  // det(F + sH) = det F + s <cof F, H> for rank-one H (det H = 0).
  const Mat2 f{1.3, 0.2, -0.4, 1.1};
  const Mat2 h{0.5 * 0.8, 0.5 * -0.6, -0.25 * 0.8, -0.25 * -0.6};  // u (x) v
  for (double s : {-2.0, -0.5, 0.75, 3.0}) {
    const double lhs = det(f + s * h);
    const double rhs = det(f) + s * inner(cofactor(f), h);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("random SL(2) suite: product, gap identity, rotation invariance") {
  std::mt19937 rng(20240611u);
  for (int k = 0; k < 200; ++k) {
    const Mat2 f = random_sl2(rng, 4.0);
    const SingularPair sv = singular_values(f);
    CHECK(std::fabs(sv.sigma_max * sv.sigma_min - 1.0) < 1e-9);

    const double diff = sv.sigma_max - sv.sigma_min;
    CHECK(std::fabs(diff * diff - (frobenius_norm_sq(f) - 2.0)) < 1e-9);

    const SingularPair oracle = svd_via_gram(f);
    CHECK(std::fabs(sv.sigma_max - oracle.sigma_max) < 1e-9);
    CHECK(std::fabs(sv.sigma_min - oracle.sigma_min) < 1e-9);

    const Mat2 g = rotation(1.1) * f * rotation(-2.3);
    const SingularPair sg = singular_values(g);
    CHECK(std::fabs(sg.sigma_max - sv.sigma_max) < 1e-9);
    CHECK(std::fabs(sg.sigma_min - sv.sigma_min) < 1e-9);
  }
}
