#include "sl2relax/kernels.hpp"

// Reference backend. The AVX2 variants mirror these loops element for
// element; keep the expression shapes in sync or bitwise equivalence breaks.
// Results that can be an exact zero are normalized with "+ 0.0" so both
// backends agree on the sign of zero.

namespace sl2relax::kernels::scalar {

double conjugate_max(const double* ts, const double* fs, std::size_t n, double slope) {
  double best = slope * ts[0] - fs[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double cand = slope * ts[i] - fs[i];
    best = cand > best ? cand : best;
  }
  return best + 0.0;
}

void secant_slopes(const double* ts, const double* fs, std::size_t n, double t0,
                   double f0, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (fs[i] - f0) / (ts[i] - t0);
}

void chord_min_update(double* env, const double* ts, const double* m,
                      std::size_t n, double t0, double f0) {
  for (std::size_t i = 0; i < n; ++i) {
    const double cand = f0 + (ts[i] - t0) * m[i];
    env[i] = cand < env[i] ? cand : env[i];
  }
}

void divided_second_differences(const double* ts, const double* fs,
                                std::size_t n, double* out) {
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double left = (fs[i] - fs[i - 1]) / (ts[i] - ts[i - 1]);
    const double right = (fs[i + 1] - fs[i]) / (ts[i + 1] - ts[i]);
    out[i - 1] = (right - left) / (ts[i + 1] - ts[i - 1]);
  }
}

MinResult argmin(const double* v, std::size_t n) {
  double best = v[0];
  std::size_t idx = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] < best) {
      best = v[i];
      idx = i;
    }
  }
  return {v[idx], idx};
}

double mix_min(const double* r_neg, std::size_t n_neg, const double* r_pos,
               std::size_t n_pos, const double* mu) {
  double best = r_neg[0] + mu[0] * (r_pos[0] - r_neg[0]);
  for (std::size_t i = 0; i < n_neg; ++i) {
    const double rn = r_neg[i];
    const double* row = mu + i * n_pos;
    for (std::size_t j = 0; j < n_pos; ++j) {
      const double cand = rn + row[j] * (r_pos[j] - rn);
      best = cand < best ? cand : best;
    }
  }
  return best + 0.0;
}

}  // namespace sl2relax::kernels::scalar
