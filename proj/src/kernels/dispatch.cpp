#include "sl2relax/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sl2relax::kernels {

namespace {

Backend detect() {
#if defined(SL2RELAX_KERNELS_HAVE_AVX2)
  bool want_avx2 = cpu_has_avx2();
  if (const char* env = std::getenv("SL2RELAX_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
    else if (std::strcmp(env, "avx2") == 0) want_avx2 = cpu_has_avx2();
  }
  return want_avx2 ? Backend::avx2 : Backend::scalar;
#else
  return Backend::scalar;
#endif
}

bool use_avx2() {
  static const bool v = detect() == Backend::avx2;
  return v;
}

}  // namespace

Backend active_backend() {
  return use_avx2() ? Backend::avx2 : Backend::scalar;
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

double conjugate_max(const double* ts, const double* fs, std::size_t n, double slope) {
#if defined(SL2RELAX_KERNELS_HAVE_AVX2)
  if (use_avx2()) return avx2::conjugate_max(ts, fs, n, slope);
#endif
  return scalar::conjugate_max(ts, fs, n, slope);
}

void secant_slopes(const double* ts, const double* fs, std::size_t n, double t0,
                   double f0, double* out) {
#if defined(SL2RELAX_KERNELS_HAVE_AVX2)
  if (use_avx2()) return avx2::secant_slopes(ts, fs, n, t0, f0, out);
#endif
  scalar::secant_slopes(ts, fs, n, t0, f0, out);
}

void chord_min_update(double* env, const double* ts, const double* m,
                      std::size_t n, double t0, double f0) {
#if defined(SL2RELAX_KERNELS_HAVE_AVX2)
  if (use_avx2()) return avx2::chord_min_update(env, ts, m, n, t0, f0);
#endif
  scalar::chord_min_update(env, ts, m, n, t0, f0);
}

void divided_second_differences(const double* ts, const double* fs,
                                std::size_t n, double* out) {
#if defined(SL2RELAX_KERNELS_HAVE_AVX2)
  if (use_avx2()) return avx2::divided_second_differences(ts, fs, n, out);
#endif
  scalar::divided_second_differences(ts, fs, n, out);
}

MinResult argmin(const double* v, std::size_t n) {
#if defined(SL2RELAX_KERNELS_HAVE_AVX2)
  if (use_avx2()) return avx2::argmin(v, n);
#endif
  return scalar::argmin(v, n);
}

double mix_min(const double* r_neg, std::size_t n_neg, const double* r_pos,
               std::size_t n_pos, const double* mu) {
#if defined(SL2RELAX_KERNELS_HAVE_AVX2)
  if (use_avx2()) return avx2::mix_min(r_neg, n_neg, r_pos, n_pos, mu);
#endif
  return scalar::mix_min(r_neg, n_neg, r_pos, n_pos, mu);
}

}  // namespace sl2relax::kernels
