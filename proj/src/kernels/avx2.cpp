#include "sl2relax/kernels.hpp"

#if defined(SL2RELAX_KERNELS_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

// AVX2 backend. Wide loop plus a scalar remainder; per-element expressions
// mirror scalar.cpp exactly (no FMA, -ffp-contract=off) so results match the
// reference backend bit for bit.

namespace sl2relax::kernels {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

}  // namespace sl2relax::kernels

namespace sl2relax::kernels::avx2 {

double conjugate_max(const double* ts, const double* fs, std::size_t n, double slope) {
  std::size_t i;
  double best;
  if (n >= 4) {
    const __m256d vs = _mm256_set1_pd(slope);
    __m256d vbest = _mm256_sub_pd(_mm256_mul_pd(vs, _mm256_loadu_pd(ts)),
                                  _mm256_loadu_pd(fs));
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d cand = _mm256_sub_pd(_mm256_mul_pd(vs, _mm256_loadu_pd(ts + i)),
                                         _mm256_loadu_pd(fs + i));
      vbest = _mm256_max_pd(cand, vbest);
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, vbest);
    best = lanes[0];
    for (int k = 1; k < 4; ++k) best = lanes[k] > best ? lanes[k] : best;
  } else {
    best = slope * ts[0] - fs[0];
    i = 1;
  }
  for (; i < n; ++i) {
    const double cand = slope * ts[i] - fs[i];
    best = cand > best ? cand : best;
  }
  return best + 0.0;
}

void secant_slopes(const double* ts, const double* fs, std::size_t n, double t0,
                   double f0, double* out) {
  const __m256d vt0 = _mm256_set1_pd(t0);
  const __m256d vf0 = _mm256_set1_pd(f0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d num = _mm256_sub_pd(_mm256_loadu_pd(fs + i), vf0);
    const __m256d den = _mm256_sub_pd(_mm256_loadu_pd(ts + i), vt0);
    _mm256_storeu_pd(out + i, _mm256_div_pd(num, den));
  }
  for (; i < n; ++i) out[i] = (fs[i] - f0) / (ts[i] - t0);
}

void chord_min_update(double* env, const double* ts, const double* m,
                      std::size_t n, double t0, double f0) {
  const __m256d vt0 = _mm256_set1_pd(t0);
  const __m256d vf0 = _mm256_set1_pd(f0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dt = _mm256_sub_pd(_mm256_loadu_pd(ts + i), vt0);
    const __m256d cand = _mm256_add_pd(vf0, _mm256_mul_pd(dt, _mm256_loadu_pd(m + i)));
    _mm256_storeu_pd(env + i, _mm256_min_pd(cand, _mm256_loadu_pd(env + i)));
  }
  for (; i < n; ++i) {
    const double cand = f0 + (ts[i] - t0) * m[i];
    env[i] = cand < env[i] ? cand : env[i];
  }
}

void divided_second_differences(const double* ts, const double* fs,
                                std::size_t n, double* out) {
  std::size_t i = 1;
  for (; i + 4 < n; i += 4) {
    const __m256d tm = _mm256_loadu_pd(ts + i - 1);
    const __m256d tc = _mm256_loadu_pd(ts + i);
    const __m256d tp = _mm256_loadu_pd(ts + i + 1);
    const __m256d fm = _mm256_loadu_pd(fs + i - 1);
    const __m256d fc = _mm256_loadu_pd(fs + i);
    const __m256d fp = _mm256_loadu_pd(fs + i + 1);
    const __m256d left = _mm256_div_pd(_mm256_sub_pd(fc, fm), _mm256_sub_pd(tc, tm));
    const __m256d right = _mm256_div_pd(_mm256_sub_pd(fp, fc), _mm256_sub_pd(tp, tc));
    const __m256d d = _mm256_div_pd(_mm256_sub_pd(right, left), _mm256_sub_pd(tp, tm));
    _mm256_storeu_pd(out + i - 1, d);
  }
  for (; i + 1 < n; ++i) {
    const double left = (fs[i] - fs[i - 1]) / (ts[i] - ts[i - 1]);
    const double right = (fs[i + 1] - fs[i]) / (ts[i + 1] - ts[i]);
    out[i - 1] = (right - left) / (ts[i + 1] - ts[i - 1]);
  }
}

MinResult argmin(const double* v, std::size_t n) {
  // Pass 1: minimum value (order-insensitive fold). Pass 2: first index.
  double best;
  std::size_t i;
  if (n >= 4) {
    __m256d vbest = _mm256_loadu_pd(v);
    for (i = 4; i + 4 <= n; i += 4)
      vbest = _mm256_min_pd(_mm256_loadu_pd(v + i), vbest);
    double lanes[4];
    _mm256_storeu_pd(lanes, vbest);
    best = lanes[0];
    for (int k = 1; k < 4; ++k) best = lanes[k] < best ? lanes[k] : best;
  } else {
    best = v[0];
    i = 1;
  }
  for (; i < n; ++i) best = v[i] < best ? v[i] : best;
  for (std::size_t k = 0; k < n; ++k)
    if (v[k] == best) return {v[k], k};
  return {best, 0};  // unreachable for finite input
}

double mix_min(const double* r_neg, std::size_t n_neg, const double* r_pos,
               std::size_t n_pos, const double* mu) {
  __m256d vbest = _mm256_set1_pd(HUGE_VAL);
  double sbest = HUGE_VAL;
  for (std::size_t i = 0; i < n_neg; ++i) {
    const double rn = r_neg[i];
    const double* row = mu + i * n_pos;
    const __m256d vrn = _mm256_set1_pd(rn);
    std::size_t j = 0;
    for (; j + 4 <= n_pos; j += 4) {
      const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(r_pos + j), vrn);
      const __m256d cand = _mm256_add_pd(vrn, _mm256_mul_pd(_mm256_loadu_pd(row + j), diff));
      vbest = _mm256_min_pd(cand, vbest);
    }
    for (; j < n_pos; ++j) {
      const double cand = rn + row[j] * (r_pos[j] - rn);
      sbest = cand < sbest ? cand : sbest;
    }
  }
  double lanes[4];
  _mm256_storeu_pd(lanes, vbest);
  for (int k = 0; k < 4; ++k) sbest = lanes[k] < sbest ? lanes[k] : sbest;
  return sbest + 0.0;
}

}  // namespace sl2relax::kernels::avx2

#endif  // SL2RELAX_KERNELS_HAVE_AVX2
