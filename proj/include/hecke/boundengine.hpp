#pragma once

// One-sided eigenvalue constants derived from pole orders by Hölder-type
// arguments.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke::bounds {

struct BoundResult {
  double constant = 0.0;
  /// Crossing point d* (positive side) or the worst-case density corner.
  std::optional<double> optimizer;
  std::pair<double, double> branch_values{0.0, 0.0};
  std::vector<std::string> trace;
};

/// Both branches of the positive-side max at a given d.
struct PositiveBranches {
  double rising = 0.0;   // (d^5 / pole8)^(1/12)
  double falling = 0.0;  // (pole4 - d)^(1/4)
  double max() const { return rising > falling ? rising : falling; }
};

PositiveBranches positive_branches(double d, int pole4, int pole8);

/// min over d in [0, pole4] of max{(d^5/pole8)^(1/12), (pole4 - d)^(1/4)},
/// located by bisection on the crossing of the two monotone branches.
/// With (2, 14) this is 0.9042... at d* = 1.3314...
BoundResult positive_side(int pole4 = 2, int pole8 = 14);

/// Smallest t compatible with  L - t^6 dB <= dB^(6/7) t^6 dA^(1/7)  over
/// densities dA, dB in (0, 1]; the corner (1, 1) is the worst case, giving
/// (L/2)^(1/6). Default L = 5 gives 1.16499...
BoundResult negative_side(int pole6_lower = 5);

/// The negative-side argument run with the k = 2 pole (1) and squares:
/// 1 - t^2 dB <= (t^3 dB)^(2/3) dA^(1/3), giving 1/sqrt(2).
BoundResult positive_side_weak();

/// Non-self-dual case: 1/2 - t^2 dB <= (t^3 dB)^(2/3) dA^(1/3), giving 1/2
/// for every rotation angle phi in [0, pi].
BoundResult non_self_dual(double phi = 0.0);

/// Smallest t with  lower - t^m dB <= (t^(m+1) dB)^(m/(m+1)) dA^(1/(m+1)) at
/// given densities.
double admissible_threshold(double lower, int exponent, double density_a, double density_b);

/// Minimum of admissible_threshold over a grid of (dA, dB) in (0, 1]^2 with
/// the given step, and where it is attained.
struct GridScan {
  double minimum = 0.0;
  double density_a = 0.0;
  double density_b = 0.0;
};
GridScan worst_case_scan(double lower, int exponent, double step = 1e-2);

/// Literature constants 2cos(2pi/7) ("serre") and 2cos(2pi/11)
/// ("kim-shahidi"); stored, not derived.
const std::map<std::string, double, std::less<>>& reference_constants();
std::optional<double> lookup_reference(std::string_view name);

/// Threshold c separating A_u from A_b: for real a_p > c with trivial central
/// character all power sums alpha^m + beta^m are positive.
inline constexpr double kLargeEigenvalueCut = 2.0;

/// Truncate (not round) to `digits` decimals, e.g. 1.16499 -> "1.164".
std::string truncate_decimal(double value, int digits);

}  // namespace hecke::bounds
