#pragma once

#include <cstddef>

namespace sl2relax::kernels {

// Dense inner loops behind the envelope, classification, and lamination
// code: a scalar reference implementation plus an AVX2 variant selected at
// runtime. Both backends use the same per-element expression shape and are
// compiled with -ffp-contract=off, and every reduction is order-insensitive,
// so results are bitwise identical across backends (equivalence-tested).
//
// Set SL2RELAX_KERNELS=scalar (or =avx2) to force a backend; the AVX2 choice
// silently falls back to scalar on hardware without AVX2.

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name(Backend b);

struct MinResult {
  double value;
  std::size_t index;  // first index attaining the minimum
};

// max_i (slope * ts[i] - fs[i]); n >= 1.
double conjugate_max(const double* ts, const double* fs, std::size_t n, double slope);

// out[i] = (fs[i] - f0) / (ts[i] - t0); ts[i] != t0.
void secant_slopes(const double* ts, const double* fs, std::size_t n, double t0,
                   double f0, double* out);

// env[i] = min(env[i], f0 + (ts[i] - t0) * m[i]).
void chord_min_update(double* env, const double* ts, const double* m,
                      std::size_t n, double t0, double f0);

// out[i] = divided second difference f[t_i, t_{i+1}, t_{i+2}]; n >= 3,
// producing n - 2 values.
void divided_second_differences(const double* ts, const double* fs,
                                std::size_t n, double* out);

// First minimum of v[0..n); n >= 1.
MinResult argmin(const double* v, std::size_t n);

// min over (i, j) of r_neg[i] + mu[i * n_pos + j] * (r_pos[j] - r_neg[i]).
// Entries may carry a large finite sentinel to opt out of the minimum.
double mix_min(const double* r_neg, std::size_t n_neg, const double* r_pos,
               std::size_t n_pos, const double* mu);

namespace scalar {
double conjugate_max(const double* ts, const double* fs, std::size_t n, double slope);
void secant_slopes(const double* ts, const double* fs, std::size_t n, double t0,
                   double f0, double* out);
void chord_min_update(double* env, const double* ts, const double* m,
                      std::size_t n, double t0, double f0);
void divided_second_differences(const double* ts, const double* fs,
                                std::size_t n, double* out);
MinResult argmin(const double* v, std::size_t n);
double mix_min(const double* r_neg, std::size_t n_neg, const double* r_pos,
               std::size_t n_pos, const double* mu);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SL2RELAX_KERNELS_HAVE_AVX2 1
bool cpu_has_avx2();
namespace avx2 {
double conjugate_max(const double* ts, const double* fs, std::size_t n, double slope);
void secant_slopes(const double* ts, const double* fs, std::size_t n, double t0,
                   double f0, double* out);
void chord_min_update(double* env, const double* ts, const double* m,
                      std::size_t n, double t0, double f0);
void divided_second_differences(const double* ts, const double* fs,
                                std::size_t n, double* out);
MinResult argmin(const double* v, std::size_t n);
double mix_min(const double* r_neg, std::size_t n_neg, const double* r_pos,
               std::size_t n_pos, const double* mu);
}  // namespace avx2
#endif

}  // namespace sl2relax::kernels
