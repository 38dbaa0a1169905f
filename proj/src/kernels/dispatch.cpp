#include <cmath>
#include <string>

#include "hecke/error.hpp"
#include "kernel_impl.hpp"

namespace hecke::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* lookup(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_kernels();
    case Isa::Avx2:
      return cpu_has_avx2() ? detail::avx2_table() : nullptr;
    case Isa::Neon:
      return detail::neon_table();  // baseline on aarch64
  }
  return nullptr;
}

void check_sizes(std::size_t re, std::size_t im, std::size_t weight) {
  if (re != im || re != weight) {
    throw InvalidArgument("kernel inputs must have equal lengths");
  }
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "?";
}

Projection Projection::from_angle(double phi) {
  if (phi == 0.0) return {1.0, 0.0};
  return {std::cos(phi), std::sin(phi)};
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (lookup(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  const KernelTable* table = lookup(isa);
  if (table == nullptr) {
    throw UnsupportedError("kernel variant '" + std::string(to_string(isa)) +
                           "' is not available on this machine");
  }
  return *table;
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = kernels_for(available_isas().back());
  return chosen;
}

double rotated_power_sum(std::span<const double> re, std::span<const double> im,
                         std::span<const double> weight, Projection projection, int k) {
  check_sizes(re.size(), im.size(), weight.size());
  if (k < 0) throw InvalidArgument("power must be >= 0");
  return active_kernels().rotated_power_sum(re.data(), im.data(), weight.data(), re.size(),
                                            projection, k);
}

ThresholdTally threshold_tally(std::span<const double> re, std::span<const double> im,
                               std::span<const double> weight, Projection projection,
                               double threshold) {
  check_sizes(re.size(), im.size(), weight.size());
  if (!(threshold >= 0.0)) throw InvalidArgument("threshold must be >= 0");
  return active_kernels().threshold_tally(re.data(), im.data(), weight.data(), re.size(),
                                          projection, threshold);
}

}  // namespace hecke::kernels
