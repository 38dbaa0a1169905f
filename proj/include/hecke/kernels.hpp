#pragma once

// Data-parallel reductions over per-prime arrays, with a scalar reference
// implementation and vector variants picked at runtime.
//
// Every kernel projects a_p onto the line given by phi,
//   x_p = re_p * cos(phi) - im_p * sin(phi)   (= Re(a_p e^{i phi})),
// using one multiply per term and one subtraction (no fused multiply-add), so
// all variants see bit-identical x_p and threshold counts agree exactly.
// Sums may differ only by reassociation.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hecke::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

struct Projection {
  double cos_phi = 1.0;
  double sin_phi = 0.0;

  static Projection from_angle(double phi);
};

struct ThresholdTally {
  std::size_t above = 0;  // x_p > c
  std::size_t below = 0;  // x_p < -c
  double weight_above = 0.0;
  double weight_below = 0.0;

  bool operator==(const ThresholdTally&) const = default;
};

struct KernelTable {
  Isa isa = Isa::Scalar;
  /// sum_p x_p^k * weight_p
  double (*rotated_power_sum)(const double* re, const double* im, const double* weight,
                              std::size_t n, Projection projection, int k) = nullptr;
  ThresholdTally (*threshold_tally)(const double* re, const double* im, const double* weight,
                                    std::size_t n, Projection projection,
                                    double threshold) = nullptr;
};

const KernelTable& scalar_kernels();

/// Variants compiled into this build and supported by the running CPU,
/// scalar first.
std::vector<Isa> available_isas();

/// Throws hecke::UnsupportedError when `isa` is not available.
const KernelTable& kernels_for(Isa isa);

/// Widest available variant; resolved once.
const KernelTable& active_kernels();

double rotated_power_sum(std::span<const double> re, std::span<const double> im,
                         std::span<const double> weight, Projection projection, int k);

/// Counts x_p > threshold and x_p < -threshold; threshold must be >= 0.
ThresholdTally threshold_tally(std::span<const double> re, std::span<const double> im,
                               std::span<const double> weight, Projection projection,
                               double threshold);

}  // namespace hecke::kernels
