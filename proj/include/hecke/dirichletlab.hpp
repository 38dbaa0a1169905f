#pragma once

// Empirical side of the argument: truncated Dirichlet sums over a finite
// list of primes, density profiles and theorem proxies.
//
// Everything here is a finite-X diagnostic. sum_{p<=X} p^-s saturates near
// log log X while log(1/(s-1)) grows without bound, so the default operating
// point is s = 1 + 1/log X.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hecke/datasource.hpp"

namespace hecke::lab {

using data::Dataset;
using data::EigenvalueRecord;

/// Structure-of-arrays view of a record list, laid out for the kernels.
struct PrimeSeries {
  std::vector<double> p;
  std::vector<double> log_p;
  std::vector<double> re;
  std::vector<double> im;

  static PrimeSeries from(const std::vector<EigenvalueRecord>& records);
  std::size_t size() const { return p.size(); }
  /// p^-s for every prime.
  std::vector<double> weights(double s) const;
};

/// log(1 / (s - 1)).
double ell(double s);

/// 1 + 1 / log X.
double operating_point(std::uint64_t X);

/// Largest prime in the records, or 2 when empty.
std::uint64_t effective_x(const std::vector<EigenvalueRecord>& records);

/// sum_p Re(a_p e^{i phi})^k / p^s. Throws InvalidArgument for s <= 1,
/// k < 0 or empty data.
double truncated_sum(const std::vector<EigenvalueRecord>& records, int k, double s, double phi = 0.0);

/// truncated_sum / log(1/(s-1)).
double normalized_ratio(const std::vector<EigenvalueRecord>& records, int k, double s,
                        double phi = 0.0);

enum class Side { Above, Below };

std::string_view to_string(Side side);
Side parse_side(std::string_view text);

struct DensityReport {
  double threshold = 0.0;
  Side side = Side::Above;
  double phi = 0.0;
  double natural_proportion = 0.0;
  /// sum_{p in S} p^-s / log(1/(s-1)) at s = s_used.
  double dirichlet_weighted = 0.0;
  std::size_t count = 0;
  std::size_t total = 0;
  double s_used = 0.0;
  std::uint64_t X = 0;
};

/// Primes with x_p > c (Above) or x_p < -c (Below), x_p = Re(a_p e^{i phi}).
/// X defaults to the largest prime present.
DensityReport density_profile(const std::vector<EigenvalueRecord>& records, double c, Side side,
                              double phi = 0.0, std::optional<std::uint64_t> X = std::nullopt);

/// Least-squares slope of truncated_sum(k, s) against log(1/(s-1)). The grid
/// needs at least 3 points with max(s-1)/min(s-1) >= 4.
double pole_order_probe(const std::vector<EigenvalueRecord>& records, int k,
                        const std::vector<double>& s_grid);

inline const std::vector<double> kDefaultSGrid{1.5, 1.25, 1.1, 1.05};

enum class Theorem { T1Pos, T1Neg, T2 };

std::string_view to_string(Theorem theorem);
Theorem parse_theorem(std::string_view text);

struct TheoremReport {
  Theorem theorem = Theorem::T1Pos;
  double phi = 0.0;
  double eps = 0.01;
  /// Primes qualify when x_p > threshold (T1Pos, T2) or x_p < threshold (T1Neg).
  double threshold = 0.0;
  std::size_t count = 0;
  std::size_t total = 0;
  std::size_t required = 0;
  /// Up to 10 qualifying primes, largest first, with their x_p.
  std::vector<std::pair<std::uint64_t, double>> witnesses;
  bool pass = false;
};

inline constexpr std::size_t kWitnessCount = 10;

/// Counts primes beyond the proven constant minus eps and passes when the
/// count reaches max(1, floor(0.01 * #records)). T1 needs data tagged
/// self-dual.
TheoremReport verify_theorem(const Dataset& data, Theorem theorem, double phi = 0.0,
                             double eps = 0.01);

/// a_p -> a_p e^{i phi}, using the same projection arithmetic as the kernels
/// so the real parts match bit for bit.
std::vector<EigenvalueRecord> rotate(const std::vector<EigenvalueRecord>& records, double phi);

nlohmann::json to_json(const DensityReport& report);
nlohmann::json to_json(const TheoremReport& report);

}  // namespace hecke::lab
