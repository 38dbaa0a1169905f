// Built with -mavx2; only reached after a runtime CPU check.
#include "kernel_impl.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace hecke::kernels {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256d project4(const double* re, const double* im, __m256d c, __m256d s) {
  const __m256d a = _mm256_mul_pd(_mm256_loadu_pd(re), c);
  const __m256d b = _mm256_mul_pd(_mm256_loadu_pd(im), s);
  return _mm256_sub_pd(a, b);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double rotated_power_sum_avx2(const double* re, const double* im, const double* weight,
                              std::size_t n, Projection projection, int k) {
  const __m256d c = _mm256_set1_pd(projection.cos_phi);
  const __m256d s = _mm256_set1_pd(projection.sin_phi);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = project4(re + i, im + i, c, s);
    __m256d t = one;
    for (int j = 0; j < k; ++j) t = _mm256_mul_pd(t, x);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(t, _mm256_loadu_pd(weight + i)));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += detail::int_power(detail::project(re[i], im[i], projection), k) * weight[i];
  }
  return hsum(acc) + tail;
}

ThresholdTally threshold_tally_avx2(const double* re, const double* im, const double* weight,
                                    std::size_t n, Projection projection, double threshold) {
  const __m256d c = _mm256_set1_pd(projection.cos_phi);
  const __m256d s = _mm256_set1_pd(projection.sin_phi);
  const __m256d hi = _mm256_set1_pd(threshold);
  const __m256d lo = _mm256_set1_pd(-threshold);
  __m256d w_above = _mm256_setzero_pd();
  __m256d w_below = _mm256_setzero_pd();
  ThresholdTally t;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = project4(re + i, im + i, c, s);
    const __m256d w = _mm256_loadu_pd(weight + i);
    const __m256d above = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
    const __m256d below = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    t.above += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(above)));
    t.below += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(below)));
    w_above = _mm256_add_pd(w_above, _mm256_and_pd(above, w));
    w_below = _mm256_add_pd(w_below, _mm256_and_pd(below, w));
  }
  t.weight_above = hsum(w_above);
  t.weight_below = hsum(w_below);
  for (; i < n; ++i) {
    const double x = detail::project(re[i], im[i], projection);
    if (x > threshold) {
      ++t.above;
      t.weight_above += weight[i];
    } else if (x < -threshold) {
      ++t.below;
      t.weight_below += weight[i];
    }
  }
  return t;
}

}  // namespace

const KernelTable* detail::avx2_table() {
  static const KernelTable table{Isa::Avx2, rotated_power_sum_avx2, threshold_tally_avx2};
  return &table;
}

}  // namespace hecke::kernels

#else

const hecke::kernels::KernelTable* hecke::kernels::detail::avx2_table() { return nullptr; }

#endif
