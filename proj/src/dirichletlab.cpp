#include "hecke/dirichletlab.hpp"

#include <algorithm>
#include <cmath>

#include "hecke/boundengine.hpp"
#include "hecke/error.hpp"
#include "hecke/kernels.hpp"

namespace hecke::lab {
namespace {

void require_s(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) throw InvalidArgument("s must be a finite real > 1");
}

void require_data(const std::vector<EigenvalueRecord>& records) {
  if (records.empty()) throw InvalidArgument("dataset is empty");
}

}  // namespace

PrimeSeries PrimeSeries::from(const std::vector<EigenvalueRecord>& records) {
  PrimeSeries s;
  s.p.reserve(records.size());
  s.log_p.reserve(records.size());
  s.re.reserve(records.size());
  s.im.reserve(records.size());
  for (const auto& r : records) {
    const auto p = static_cast<double>(r.p);
    s.p.push_back(p);
    s.log_p.push_back(std::log(p));
    s.re.push_back(r.a.real());
    s.im.push_back(r.a.imag());
  }
  return s;
}

std::vector<double> PrimeSeries::weights(double s) const {
  std::vector<double> w(size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(-s * log_p[i]);
  return w;
}

double ell(double s) {
  require_s(s);
  return std::log(1.0 / (s - 1.0));
}

double operating_point(std::uint64_t X) {
  if (X < 2) throw InvalidArgument("X must be >= 2");
  return 1.0 + 1.0 / std::log(static_cast<double>(X));
}

std::uint64_t effective_x(const std::vector<EigenvalueRecord>& records) {
  return records.empty() ? 2 : std::max<std::uint64_t>(records.back().p, 2);
}

double truncated_sum(const std::vector<EigenvalueRecord>& records, int k, double s, double phi) {
  require_s(s);
  require_data(records);
  if (k < 0) throw InvalidArgument("k must be >= 0");
  const auto series = PrimeSeries::from(records);
  const auto w = series.weights(s);
  return kernels::rotated_power_sum(series.re, series.im, w, kernels::Projection::from_angle(phi), k);
}

double normalized_ratio(const std::vector<EigenvalueRecord>& records, int k, double s, double phi) {
  return truncated_sum(records, k, s, phi) / ell(s);
}

std::string_view to_string(Side side) { return side == Side::Above ? "above" : "below"; }

Side parse_side(std::string_view text) {
  if (text == "above") return Side::Above;
  if (text == "below") return Side::Below;
  throw InvalidArgument("side must be above or below");
}

DensityReport density_profile(const std::vector<EigenvalueRecord>& records, double c, Side side,
                              double phi, std::optional<std::uint64_t> X) {
  require_data(records);
  if (!(c >= 0.0)) throw InvalidArgument("threshold c must be >= 0");
  DensityReport r;
  r.threshold = c;
  r.side = side;
  r.phi = phi;
  r.total = records.size();
  r.X = X.value_or(effective_x(records));
  r.s_used = operating_point(r.X);

  const auto series = PrimeSeries::from(records);
  const auto w = series.weights(r.s_used);
  const auto tally =
      kernels::threshold_tally(series.re, series.im, w, kernels::Projection::from_angle(phi), c);
  r.count = side == Side::Above ? tally.above : tally.below;
  const double weight = side == Side::Above ? tally.weight_above : tally.weight_below;
  r.natural_proportion = static_cast<double>(r.count) / static_cast<double>(r.total);
  r.dirichlet_weighted = weight / ell(r.s_used);
  return r;
}

double pole_order_probe(const std::vector<EigenvalueRecord>& records, int k,
                        const std::vector<double>& s_grid) {
  if (s_grid.size() < 3) throw InvalidArgument("s grid needs at least 3 points");
  double lo = INFINITY, hi = 0.0;
  for (double s : s_grid) {
    require_s(s);
    lo = std::min(lo, s - 1.0);
    hi = std::max(hi, s - 1.0);
  }
  if (hi < 4.0 * lo) throw InvalidArgument("s - 1 must span at least a factor of 4");

  std::vector<double> xs, ys;
  for (double s : s_grid) {
    xs.push_back(ell(s));
    ys.push_back(truncated_sum(records, k, s));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

std::string_view to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::T1Pos: return "t1pos";
    case Theorem::T1Neg: return "t1neg";
    case Theorem::T2: return "t2";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  if (text == "t1pos") return Theorem::T1Pos;
  if (text == "t1neg") return Theorem::T1Neg;
  if (text == "t2") return Theorem::T2;
  throw InvalidArgument("theorem must be t1pos, t1neg or t2");
}

TheoremReport verify_theorem(const Dataset& data, Theorem theorem, double phi, double eps) {
  if (!(eps >= 0.0)) throw InvalidArgument("eps must be >= 0");
  if (theorem != Theorem::T2 && !data.header.self_dual) {
    throw InvalidArgument("t1pos/t1neg need a dataset tagged self_dual=true");
  }
  if (theorem != Theorem::T2 && phi != 0.0) {
    throw InvalidArgument("phi only applies to t2");
  }
  TheoremReport r;
  r.theorem = theorem;
  r.phi = phi;
  r.eps = eps;
  r.total = data.records.size();
  r.required = std::max<std::size_t>(1, r.total / 100);
  switch (theorem) {
    case Theorem::T1Pos: r.threshold = bounds::positive_side().constant - eps; break;
    case Theorem::T1Neg: r.threshold = -(bounds::negative_side().constant - eps); break;
    case Theorem::T2: r.threshold = bounds::non_self_dual(phi).constant - eps; break;
  }

  const auto proj = kernels::Projection::from_angle(phi);
  for (auto it = data.records.rbegin(); it != data.records.rend(); ++it) {
    const double x = it->a.real() * proj.cos_phi - it->a.imag() * proj.sin_phi;
    const bool hit = theorem == Theorem::T1Neg ? x < r.threshold : x > r.threshold;
    if (!hit) continue;
    ++r.count;
    if (r.witnesses.size() < kWitnessCount) r.witnesses.emplace_back(it->p, x);
  }
  r.pass = r.count >= r.required;
  return r;
}

std::vector<EigenvalueRecord> rotate(const std::vector<EigenvalueRecord>& records, double phi) {
  const auto proj = kernels::Projection::from_angle(phi);
  std::vector<EigenvalueRecord> out = records;
  for (auto& r : out) {
    const double re = r.a.real() * proj.cos_phi - r.a.imag() * proj.sin_phi;
    const double im = r.a.real() * proj.sin_phi + r.a.imag() * proj.cos_phi;
    r.a = {re, im};
    r.raw.reset();
  }
  return out;
}

nlohmann::json to_json(const DensityReport& r) {
  return {{"threshold", r.threshold},
          {"side", to_string(r.side)},
          {"phi", r.phi},
          {"natural_proportion", r.natural_proportion},
          {"dirichlet_weighted", r.dirichlet_weighted},
          {"count", r.count},
          {"total", r.total},
          {"s_used", r.s_used},
          {"X", r.X}};
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& [p, x] : r.witnesses) witnesses.push_back({{"p", p}, {"x", x}});
  return {{"theorem", to_string(r.theorem)},
          {"phi", r.phi},
          {"eps", r.eps},
          {"threshold", r.threshold},
          {"count", r.count},
          {"total", r.total},
          {"required", r.required},
          {"witnesses", witnesses},
          {"pass", r.pass}};
}

}  // namespace hecke::lab
