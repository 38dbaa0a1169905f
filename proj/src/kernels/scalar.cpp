#include "kernel_impl.hpp"

namespace hecke::kernels {
namespace {

double rotated_power_sum_scalar(const double* re, const double* im, const double* weight,
                                std::size_t n, Projection projection, int k) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = detail::project(re[i], im[i], projection);
    sum += detail::int_power(x, k) * weight[i];
  }
  return sum;
}

ThresholdTally threshold_tally_scalar(const double* re, const double* im, const double* weight,
                                      std::size_t n, Projection projection, double threshold) {
  ThresholdTally t;
  for (std::size_t i = 0; i < n; ++i) {
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

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, rotated_power_sum_scalar, threshold_tally_scalar};
  return table;
}

}  // namespace hecke::kernels
