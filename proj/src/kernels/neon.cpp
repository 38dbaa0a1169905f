#include "kernel_impl.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace hecke::kernels {
namespace {

constexpr std::size_t kLanes = 2;

inline float64x2_t project2(const double* re, const double* im, float64x2_t c, float64x2_t s) {
  const float64x2_t a = vmulq_f64(vld1q_f64(re), c);
  const float64x2_t b = vmulq_f64(vld1q_f64(im), s);
  return vsubq_f64(a, b);
}

double rotated_power_sum_neon(const double* re, const double* im, const double* weight,
                              std::size_t n, Projection projection, int k) {
  const float64x2_t c = vdupq_n_f64(projection.cos_phi);
  const float64x2_t s = vdupq_n_f64(projection.sin_phi);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t x = project2(re + i, im + i, c, s);
    float64x2_t t = vdupq_n_f64(1.0);
    for (int j = 0; j < k; ++j) t = vmulq_f64(t, x);
    acc = vaddq_f64(acc, vmulq_f64(t, vld1q_f64(weight + i)));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += detail::int_power(detail::project(re[i], im[i], projection), k) * weight[i];
  }
  return vaddvq_f64(acc) + tail;
}

ThresholdTally threshold_tally_neon(const double* re, const double* im, const double* weight,
                                    std::size_t n, Projection projection, double threshold) {
  const float64x2_t c = vdupq_n_f64(projection.cos_phi);
  const float64x2_t s = vdupq_n_f64(projection.sin_phi);
  const float64x2_t hi = vdupq_n_f64(threshold);
  const float64x2_t lo = vdupq_n_f64(-threshold);
  float64x2_t w_above = vdupq_n_f64(0.0);
  float64x2_t w_below = vdupq_n_f64(0.0);
  uint64x2_t n_above = vdupq_n_u64(0);
  uint64x2_t n_below = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t x = project2(re + i, im + i, c, s);
    const float64x2_t w = vld1q_f64(weight + i);
    const uint64x2_t above = vcgtq_f64(x, hi);
    const uint64x2_t below = vcltq_f64(x, lo);
    // all-ones lanes shifted down to 1
    n_above = vaddq_u64(n_above, vshrq_n_u64(above, 63));
    n_below = vaddq_u64(n_below, vshrq_n_u64(below, 63));
    w_above = vaddq_f64(w_above, vreinterpretq_f64_u64(vandq_u64(above, vreinterpretq_u64_f64(w))));
    w_below = vaddq_f64(w_below, vreinterpretq_f64_u64(vandq_u64(below, vreinterpretq_u64_f64(w))));
  }
  ThresholdTally t;
  t.above = static_cast<std::size_t>(vaddvq_u64(n_above));
  t.below = static_cast<std::size_t>(vaddvq_u64(n_below));
  t.weight_above = vaddvq_f64(w_above);
  t.weight_below = vaddvq_f64(w_below);
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

const KernelTable* detail::neon_table() {
  static const KernelTable table{Isa::Neon, rotated_power_sum_neon, threshold_tally_neon};
  return &table;
}

}  // namespace hecke::kernels

#else

const hecke::kernels::KernelTable* hecke::kernels::detail::neon_table() { return nullptr; }

#endif
