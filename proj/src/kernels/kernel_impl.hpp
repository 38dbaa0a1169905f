#pragma once

#include "hecke/kernels.hpp"

namespace hecke::kernels::detail {

// nullptr when the variant is not compiled for this target.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// Internal linkage: this header is also compiled with -mavx2, and a shared
// out-of-line copy must never leak into code run on older CPUs.
static inline double project(double re, double im, Projection p) {
  const double a = re * p.cos_phi;
  const double b = im * p.sin_phi;
  return a - b;
}

static inline double int_power(double x, int k) {
  double t = 1.0;
  for (int j = 0; j < k; ++j) t *= x;
  return t;
}

}  // namespace hecke::kernels::detail
