// Compiled with -mavx2 (see src/CMakeLists.txt); callers must check
// avx2_supported() before dispatching here.
#include <immintrin.h>

#include <cmath>

#include "kspp/kernels.hpp"

namespace kspp::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, int n) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  double out = hsum(acc);
  for (; i < n; ++i) out += a[i] * b[i];
  return out;
}

void matvec_avx2(const double* m, const double* x, double* y, int n) {
  for (int r = 0; r < n; ++r) y[r] = dot_avx2(m + static_cast<std::size_t>(r) * n, x, n);
}

double resid_inf_avx2(const double* y, const double* x, double lambda, int n) {
  const __m256d vl = _mm256_set1_pd(lambda);
  const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d worst = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(vl, _mm256_loadu_pd(x + i)));
    worst = _mm256_max_pd(worst, _mm256_and_pd(d, absmask));
  }
  __m128d lo = _mm256_castpd256_pd128(worst);
  __m128d hi = _mm256_extractf128_pd(worst, 1);
  lo = _mm_max_pd(lo, hi);
  double out = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
  for (; i < n; ++i) out = std::max(out, std::fabs(y[i] - lambda * x[i]));
  return out;
}

void scale_avx2(double* x, double s, int n) {
  const __m256d vs = _mm256_set1_pd(s);
  int i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vs));
  for (; i < n; ++i) x[i] *= s;
}

}  // namespace

const VecKernels& avx2_kernels() {
  static const VecKernels k{"avx2", dot_avx2, matvec_avx2, resid_inf_avx2, scale_avx2};
  return k;
}

}  // namespace kspp::kernels
