#pragma once

#include <algorithm>
#include <cmath>

#include "sl2relax/errors.hpp"

namespace sl2relax {

inline constexpr double kDefaultSl2Tol = 1e-9;

// Real 2x2 matrix, row major. Plain value type; all operations are pure.
struct Mat2 {
  double a11, a12, a21, a22;
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

inline Mat2 operator*(double s, const Mat2& m) {
  return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline double det(const Mat2& f) { return f.a11 * f.a22 - f.a12 * f.a21; }

inline double frobenius_norm_sq(const Mat2& f) {
  return f.a11 * f.a11 + f.a12 * f.a12 + f.a21 * f.a21 + f.a22 * f.a22;
}

// Frobenius inner product <A, B>.
inline double inner(const Mat2& a, const Mat2& b) {
  return a.a11 * b.a11 + a.a12 * b.a12 + a.a21 * b.a21 + a.a22 * b.a22;
}

// Cofactor matrix: <cof F, H> is the first-order change of det along H.
inline Mat2 cofactor(const Mat2& f) {
  return {f.a22, -f.a21, -f.a12, f.a11};
}

inline Mat2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, -s, s, c};
}

inline Mat2 inverse(const Mat2& f) {
  const double d = det(f);
  if (d == 0.0) throw NonPositiveDeterminant(d);
  return {f.a22 / d, -f.a12 / d, -f.a21 / d, f.a11 / d};
}

// Validates det F = 1 within tol and returns F unchanged.
// NaN entries fail the check as well.
inline Mat2 assert_sl2(const Mat2& f, double tol = kDefaultSl2Tol) {
  const double d = det(f);
  if (!(std::fabs(d - 1.0) <= tol)) throw NotSpecialLinear(d);
  return f;
}

struct SingularPair {
  double sigma_max, sigma_min;
};

// Closed-form singular values of a 2x2 matrix with positive determinant:
// sigma_max = (sqrt(|F|^2 + 2 det F) + sqrt(|F|^2 - 2 det F)) / 2,
// sigma_min recovered from the product sigma_max * sigma_min = det F.
inline SingularPair singular_values(const Mat2& f) {
  const double d = det(f);
  if (!(d > 0.0)) throw NonPositiveDeterminant(d);
  const double n2 = frobenius_norm_sq(f);
  const double plus = std::sqrt(n2 + 2.0 * d);
  const double minus = std::sqrt(std::max(n2 - 2.0 * d, 0.0));
  const double smax = 0.5 * (plus + minus);
  return {smax, d / smax};
}

// Singular value gap sigma_max - sigma_min of an SL(2) matrix, computed as
// sqrt(|F|^2 - 2). The radicand is nonnegative up to rounding and is clamped.
inline double gap(const Mat2& f, double tol = kDefaultSl2Tol) {
  assert_sl2(f, tol);
  return std::sqrt(std::max(frobenius_norm_sq(f) - 2.0, 0.0));
}

// Singular values (lambda, 1/lambda) of an SL(2) matrix with gap t >= 0.
inline SingularPair lambda_from_gap(double t) {
  if (!(t >= 0.0)) throw NegativeGap(t);
  const double r = std::sqrt(4.0 + t * t);
  return {0.5 * (r + t), 0.5 * (r - t)};
}

// Diagonal SL(2) representative with the requested gap.
inline Mat2 representative(double t) {
  const SingularPair p = lambda_from_gap(t);
  return {p.sigma_max, 0.0, 0.0, p.sigma_min};
}

}  // namespace sl2relax
