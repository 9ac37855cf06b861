// AVX2 kernel variants. This translation unit is the only one compiled with
// -mavx2; callers reach it through the runtime-dispatched table, never directly.

#include <cstddef>

#include "kernels_table.hpp"

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

#include <cmath>

namespace decomp::kernels::detail {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

// lanes reversed: (x3,x2,x1,x0)
inline __m256d reverse(__m256d v) { return _mm256_permute4x64_pd(v, 0x1B); }

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + t), _mm256_loadu_pd(b + t)));
  }
  double out = hsum(acc);
  for (; t < n; ++t) out += a[t] * b[t];
  return out;
}

double dot_rev_avx2(const double* a, const double* b_last, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    const __m256d va = _mm256_loadu_pd(a + t);
    // loads b_last[-t-3 .. -t]; reversed, lane u holds b_last[-(t+u)]
    const __m256d vb = reverse(_mm256_loadu_pd(b_last - t - 3));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  double out = hsum(acc);
  for (; t < n; ++t) out += a[t] * b_last[-static_cast<std::ptrdiff_t>(t)];
  return out;
}

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + t));
  double out = hsum(acc);
  for (; t < n; ++t) out += a[t];
  return out;
}

double l1_norm_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_loadu_pd(a + t), kAbsMask));
  }
  double out = hsum(acc);
  for (; t < n; ++t) out += std::fabs(a[t]);
  return out;
}

double l1_dist_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + t), _mm256_loadu_pd(b + t));
    acc = _mm256_add_pd(acc, _mm256_and_pd(d, kAbsMask));
  }
  double out = hsum(acc);
  for (; t < n; ++t) out += std::fabs(a[t] - b[t]);
  return out;
}

double hellinger_sq_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_sqrt_pd(_mm256_loadu_pd(a + t)),
                                    _mm256_sqrt_pd(_mm256_loadu_pd(b + t)));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double out = hsum(acc);
  for (; t < n; ++t) {
    const double d = std::sqrt(a[t]) - std::sqrt(b[t]);
    out += d * d;
  }
  return out;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t t = 0;
  for (; t + 4 <= n; t += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + t));
    _mm256_storeu_pd(y + t, _mm256_add_pd(_mm256_loadu_pd(y + t), prod));
  }
  for (; t < n; ++t) y[t] += alpha * x[t];
}

}  // namespace

const KernelTable* avx2_table() noexcept {
  static const KernelTable table{
      dot_avx2,     dot_rev_avx2,      sum_avx2, l1_norm_avx2,
      l1_dist_avx2, hellinger_sq_avx2, axpy_avx2,
  };
  return &table;
}

}  // namespace decomp::kernels::detail

#else

namespace decomp::kernels::detail {

const KernelTable* avx2_table() noexcept { return nullptr; }

}  // namespace decomp::kernels::detail

#endif
