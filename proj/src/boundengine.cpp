#include "hecke/boundengine.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke::bounds {
namespace {

constexpr double kBisectionTolerance = 1e-12;
constexpr int kBisectionMaxIterations = 200;
constexpr double kCrossingTolerance = 1e-10;

std::string fmt(const char* pattern, double value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

// Scans the density grid and checks that the closed form at the corner
// (1, 1) really is the minimum.
BoundResult corner_bound(double lower, int exponent, std::vector<std::string> trace) {
  const double closed_form = std::pow(lower / 2.0, 1.0 / exponent);
  const GridScan scan = worst_case_scan(lower, exponent);
  if (scan.density_a != 1.0 || scan.density_b != 1.0 ||
      std::abs(scan.minimum - closed_form) > 1e-12 * closed_form) {
    throw std::logic_error("worst case of the density scan is not at the corner (1, 1)");
  }
  const double lhs = lower - std::pow(closed_form, exponent);
  const double rhs = std::pow(closed_form, exponent);

  BoundResult r;
  r.constant = closed_form;
  r.optimizer = 1.0;
  r.branch_values = {lhs, rhs};
  trace.push_back("grid scan over (dA, dB) in (0,1]^2, step 0.01: minimum " +
                  fmt("%.12f", scan.minimum) + " at (1, 1)");
  trace.push_back("at dA = dB = 1: " + fmt("%.6g", lower) + " - t^" + std::to_string(exponent) +
                  " <= t^" + std::to_string(exponent) + "  =>  t >= (" + fmt("%.6g", lower) +
                  "/2)^(1/" + std::to_string(exponent) + ") = " + fmt("%.12f", closed_form));
  r.trace = std::move(trace);
  return r;
}

}  // namespace

PositiveBranches positive_branches(double d, int pole4, int pole8) {
  return {std::pow(std::pow(d, 5.0) / pole8, 1.0 / 12.0), std::pow(pole4 - d, 0.25)};
}

BoundResult positive_side(int pole4, int pole8) {
  if (pole4 < 1 || pole8 < 1) {
    throw InvalidArgument("positive_side needs pole orders >= 1");
  }
  // rising - falling is strictly increasing on [0, pole4], negative at 0 and
  // positive at pole4.
  double lo = 0.0;
  double hi = static_cast<double>(pole4);
  int iterations = 0;
  while (hi - lo > kBisectionTolerance && iterations < kBisectionMaxIterations) {
    const double mid = 0.5 * (lo + hi);
    const auto b = positive_branches(mid, pole4, pole8);
    (b.rising < b.falling ? lo : hi) = mid;
    ++iterations;
  }
  const double d = 0.5 * (lo + hi);
  const auto b = positive_branches(d, pole4, pole8);
  if (std::abs(b.rising - b.falling) > kCrossingTolerance) {
    throw std::logic_error("positive_side bisection did not reach the crossing");
  }

  BoundResult r;
  r.constant = b.max();
  r.optimizer = d;
  r.branch_values = {b.rising, b.falling};
  r.trace = {
      "sum_p |a_p|^4 / p^s ~ " + std::to_string(pole4) + " l(s);  sum_p |a_p|^8 / p^s <= " +
          std::to_string(pole8) + " l(s)",
      "split primes into A (a_p > 0) and B (a_p <= 0); d = limsup sum_B |a_p|^4 / p^s / l(s)",
      "Hölder: d <= " + std::to_string(pole8) + "^(1/5) (limsup sum_B |a_p|^3 / l(s))^(4/5)",
      "odd moment O(1): limsup sum_A |a_p|^3 / l(s) >= (d^5/" + std::to_string(pole8) + ")^(1/4)",
      "so infinitely many a_p > max{(d^5/" + std::to_string(pole8) + ")^(1/12), (" +
          std::to_string(pole4) + " - d)^(1/4)}",
      "bisection (" + std::to_string(iterations) + " steps): d* = " + fmt("%.12f", d) +
          ", constant = " + fmt("%.12f", r.constant),
  };
  return r;
}

double admissible_threshold(double lower, int exponent, double density_a, double density_b) {
  const double m = exponent;
  const double denominator =
      density_b + std::pow(density_b, m / (m + 1.0)) * std::pow(density_a, 1.0 / (m + 1.0));
  return std::pow(lower / denominator, 1.0 / m);
}

GridScan worst_case_scan(double lower, int exponent, double step) {
  if (!(step > 0.0) || step > 1.0) throw InvalidArgument("grid step must lie in (0, 1]");
  const int n = static_cast<int>(std::lround(1.0 / step));
  GridScan best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (int i = 1; i <= n; ++i) {
    const double da = i == n ? 1.0 : i * step;
    for (int j = 1; j <= n; ++j) {
      const double db = j == n ? 1.0 : j * step;
      const double t = admissible_threshold(lower, exponent, da, db);
      if (t < best.minimum) best = {t, da, db};
    }
  }
  return best;
}

BoundResult negative_side(int pole6_lower) {
  if (pole6_lower < 1) throw InvalidArgument("negative_side needs a pole order >= 1");
  return corner_bound(
      pole6_lower, 6,
      {
          "sum_{m<=4} sum_p (alpha^m + beta^m)^6 / p^{ms} >= " + std::to_string(pole6_lower) +
              " l(s)",
          "A = {a_p > 0}, B = {a_p <= 0}; suppose |a_p| <= t for almost all p in B",
          "seventh powers: limsup over A_u-augmented sums <= dB t^7 (odd sums are O(1))",
          "sixth powers: limsup over A-side sums >= " + std::to_string(pole6_lower) +
              " - t^6 dB",
          "Hölder (6/7, 1/7): " + std::to_string(pole6_lower) +
              " - t^6 dB <= dB^(6/7) t^6 dA^(1/7)",
          "A_u uses the cut a_p > " + fmt("%.0f", kLargeEigenvalueCut) +
              " where all alpha^m + beta^m are positive",
      });
}

BoundResult positive_side_weak() {
  return corner_bound(1.0, 2,
                      {
                          "sum_p a_p^2 / p^s ~ l(s) (simple Rankin-Selberg pole)",
                          "sum_p a_p^3 / p^s = O(1)",
                          "roles of A and B swapped: suppose a_p <= t for almost all p with a_p > 0",
                          "Hölder (2/3, 1/3): 1 - t^2 dB <= (t^3 dB)^(2/3) dA^(1/3)",
                      });
}

BoundResult non_self_dual(double phi) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi)) {
    throw InvalidArgument("phi must lie in [0, pi]");
  }
  return corner_bound(0.5, 2,
                      {
                          "rotation phi = " + fmt("%.12g", phi) +
                              "; x_p = Re(a_p e^{i phi})",
                          "sum_p x_p^2 / p^s = l(s)/2 + o(l(s)) (pi not self-dual)",
                          "sum_p x_p^3 / p^s = o(l(s))",
                          "A = {x_p > 0}, B = {x_p <= 0}; suppose |x_p| <= t for almost all p in B",
                          "Hölder (2/3, 1/3): 1/2 - t^2 dB <= (t^3 dB)^(2/3) dA^(1/3)",
                      });
}

const std::map<std::string, double, std::less<>>& reference_constants() {
  static const std::map<std::string, double, std::less<>> table{
      {"serre", 2.0 * std::cos(2.0 * std::numbers::pi / 7.0)},
      {"kim-shahidi", 2.0 * std::cos(2.0 * std::numbers::pi / 11.0)},
  };
  return table;
}

std::optional<double> lookup_reference(std::string_view name) {
  const auto& table = reference_constants();
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string truncate_decimal(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  const double truncated = std::trunc(value * scale) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, truncated);
  return buf;
}

}  // namespace hecke::bounds
