#include "hecke/datasource.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "hecke/error.hpp"
#include "hecke/primes.hpp"

namespace hecke::data {
namespace {

using i128 = __int128;

std::int64_t mod(i128 value, std::uint64_t p) {
  const auto m = static_cast<i128>(p);
  i128 r = value % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in q-series");
  return out;
}

i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in q-series");
  return out;
}

// Product of two power series truncated to `length` coefficients.
std::vector<i128> series_mul(const std::vector<i128>& a, const std::vector<i128>& b,
                             std::size_t length) {
  std::vector<i128> out(length, 0);
  for (std::size_t i = 0; i < length && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < length && j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
  }
  return out;
}

// prod_{m>=1} (1 - q^m) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
std::vector<i128> euler_product(std::size_t length) {
  std::vector<i128> out(length, 0);
  for (std::int64_t k = 0;; ++k) {
    const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g1 >= length) break;
    const i128 sign = k % 2 == 0 ? 1 : -1;
    out[g1] += sign;
    if (k > 0 && g2 < length) out[g2] += sign;
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void add_sanity_warnings(Dataset& d) {
  for (const auto& r : d.records) {
    const double bound = 2.0 * std::pow(static_cast<double>(r.p), 7.0 / 64.0);
    if (std::abs(r.a) > bound) {
      d.warnings.push_back("p=" + std::to_string(r.p) + ": |a_p| exceeds 2 p^(7/64)");
    }
  }
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_bool(std::string_view text, bool& out) {
  if (text == "true" || text == "1") {
    out = true;
    return true;
  }
  if (text == "false" || text == "0") {
    out = false;
    return true;
  }
  return false;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

DatasetHeader parse_header(std::string_view line, std::size_t line_no) {
  line.remove_prefix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  DatasetHeader h;
  bool have_source = false, have_dual = false, have_x = false;
  for (auto field : split(line, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) fail(line_no, "header field without '='");
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    if (key == "source") {
      h.source = std::string(value);
      have_source = true;
    } else if (key == "self_dual") {
      if (!parse_bool(value, h.self_dual)) fail(line_no, "self_dual must be true/false");
      have_dual = true;
    } else if (key == "normalization") {
      if (value != "unitary") fail(line_no, "only unitary normalization is supported");
      h.normalization = std::string(value);
    } else if (key == "X") {
      if (!parse_number(value, h.X) || h.X < 2) fail(line_no, "X must be an integer >= 2");
      have_x = true;
    } else if (key == "omega_trivial") {
      if (!parse_bool(value, h.omega_trivial)) fail(line_no, "omega_trivial must be true/false");
    } else if (key == "bad") {
      if (value.empty()) continue;
      for (auto item : split(value, ';')) {
        std::uint64_t p = 0;
        if (!parse_number(item, p)) fail(line_no, "bad prime list is malformed");
        h.bad_primes.push_back(p);
      }
    }
  }
  if (!have_source || !have_dual || !have_x) {
    fail(line_no, "header needs source, self_dual and X");
  }
  return h;
}

}  // namespace

// --- elliptic curves -----------------------------------------------------

ShortWeierstrass from_long_weierstrass(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                       std::int64_t a4, std::int64_t a6) {
  const i128 b2 = i128{a1} * a1 + 4 * i128{a2};
  const i128 b4 = 2 * i128{a4} + i128{a1} * a3;
  const i128 b6 = i128{a3} * a3 + 4 * i128{a6};
  const i128 c4 = b2 * b2 - 24 * b4;
  const i128 c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  const i128 a = -27 * c4;
  const i128 b = -54 * c6;
  constexpr i128 lim = static_cast<i128>(INT64_MAX);
  if (a > lim || a < -lim || b > lim || b < -lim) {
    throw InvalidArgument("short Weierstrass coefficients exceed 64 bits");
  }
  return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
}

i128 short_discriminant_core(const ShortWeierstrass& curve) {
  const i128 a = curve.a;
  const i128 b = curve.b;
  return checked_add(checked_mul(checked_mul(checked_mul(4, a), a), a), checked_mul(checked_mul(27, b), b));
}

std::int64_t count_ap(const ShortWeierstrass& curve, std::uint64_t p) {
  if (p < 3) throw InvalidArgument("count_ap needs an odd prime");
  std::vector<char> is_square(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) is_square[(x * x) % p] = 1;
  const auto a = static_cast<std::uint64_t>(mod(curve.a, p));
  const auto b = static_cast<std::uint64_t>(mod(curve.b, p));
  std::int64_t legendre_sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t f = ((x * x % p) * x + a * x + b) % p;
    if (f != 0) legendre_sum += is_square[f] ? 1 : -1;
  }
  // #E(F_p) = p + 1 + sum_x (f(x)/p)
  return -legendre_sum;
}

Dataset ec_ap(std::int64_t a, std::int64_t b, std::uint64_t X) {
  if (X < 5) throw InvalidArgument("ec_ap needs X >= 5");
  if (X > kEllipticCap) {
    throw InvalidArgument("ec_ap is capped at X = " + std::to_string(kEllipticCap));
  }
  const ShortWeierstrass curve{a, b};
  const i128 disc = short_discriminant_core(curve);
  if (disc == 0) throw InvalidArgument("singular curve: 4A^3 + 27B^2 = 0");

  Dataset d;
  d.header.source = "ec[A=" + std::to_string(a) + ";B=" + std::to_string(b) + "]";
  d.header.self_dual = true;
  d.header.X = X;
  d.header.omega_trivial = true;
  for (std::uint64_t p : primes_up_to(X)) {
    if (p <= 3 || mod(disc, p) == 0) {
      d.header.bad_primes.push_back(p);
      continue;
    }
    const std::int64_t ap = count_ap(curve, p);
    if (static_cast<std::uint64_t>(ap * ap) > 4 * p) {
      throw std::logic_error("Hasse bound violated at p=" + std::to_string(p));
    }
    d.records.push_back({p, {static_cast<double>(ap) / std::sqrt(static_cast<double>(p)), 0.0},
                         std::nullopt, std::to_string(ap)});
  }
  return d;
}

// --- Ramanujan tau --------------------------------------------------------

std::vector<i128> tau_coefficients(std::uint64_t n) {
  if (n == 0) return {};
  const std::size_t len = n;  // tau(m) is the coefficient of q^{m-1}
  const auto p1 = euler_product(len);
  const auto p2 = series_mul(p1, p1, len);
  const auto p4 = series_mul(p2, p2, len);
  const auto p8 = series_mul(p4, p4, len);
  const auto p16 = series_mul(p8, p8, len);
  return series_mul(p16, p8, len);
}

std::string to_string_i128(i128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    const int r = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -r : r)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

Dataset tau_ap(std::uint64_t X) {
  if (X < 2) throw InvalidArgument("tau_ap needs X >= 2");
  if (X > kTauCap) throw InvalidArgument("tau_ap is capped at X = " + std::to_string(kTauCap));
  const auto tau = tau_coefficients(X);
  if (X >= 6 && tau[5] != tau[1] * tau[2]) {
    throw std::logic_error("tau(6) != tau(2) tau(3)");
  }
  Dataset d;
  d.header.source = "tau";
  d.header.self_dual = true;
  d.header.X = X;
  d.header.omega_trivial = true;
  for (std::uint64_t p : primes_up_to(X)) {
    const i128 t = tau[p - 1];
    const long double normalized =
        static_cast<long double>(t) / std::pow(static_cast<long double>(p), 5.5L);
    d.records.push_back({p, {static_cast<double>(normalized), 0.0}, std::nullopt,
                         to_string_i128(t)});
  }
  return d;
}

// --- synthetic ------------------------------------------------------------

double sato_tate_cdf(double theta) {
  return (theta - std::sin(theta) * std::cos(theta)) / std::numbers::pi;
}

double sato_tate_tail_above(double c) {
  if (c >= 2.0) return 0.0;
  if (c <= -2.0) return 1.0;
  return sato_tate_cdf(std::acos(c / 2.0));
}

Dataset sato_tate_sample(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sato_tate_sample needs n >= 1");
  Dataset d;
  d.header.source = "sato-tate[seed=" + std::to_string(seed) + "]";
  d.header.self_dual = true;
  d.header.omega_trivial = true;
  const auto primes = first_primes(n);
  d.records.reserve(n);
  for (std::uint64_t p : primes) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
    std::mt19937_64 rng(seq);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double theta = 0.0;
    while (true) {
      theta = std::numbers::pi * uniform();
      const double s = std::sin(theta);
      if (uniform() <= s * s) break;
    }
    d.records.push_back({p, {2.0 * std::cos(theta), 0.0}, std::nullopt, std::nullopt});
  }
  d.header.X = primes.back() < 2 ? 2 : primes.back();
  return d;
}

// --- CSV --------------------------------------------------------------------

void write_csv(std::ostream& out, const DatasetHeader& header,
               const std::vector<EigenvalueRecord>& records) {
  if (header.source.find_first_of(",\n") != std::string::npos) {
    throw InvalidArgument("source must not contain commas or newlines");
  }
  out << "# source=" << header.source << ",self_dual=" << (header.self_dual ? "true" : "false")
      << ",normalization=" << header.normalization << ",X=" << header.X
      << ",omega_trivial=" << (header.omega_trivial ? "true" : "false") << ",bad=";
  for (std::size_t i = 0; i < header.bad_primes.size(); ++i) {
    out << (i ? ";" : "") << header.bad_primes[i];
  }
  out << '\n';
  for (const auto& r : records) {
    out << r.p << ',' << format_double(r.a.real()) << ',' << format_double(r.a.imag());
    if (r.raw) out << ',' << *r.raw;
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const DatasetHeader& header,
               const std::vector<EigenvalueRecord>& records) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path.string() + "' for writing");
  write_csv(out, header, records);
}

Dataset read_csv(std::istream& in) {
  Dataset d;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (have_header) fail(line_no, "second header line");
      d.header = parse_header(line, line_no);
      have_header = true;
      continue;
    }
    if (!have_header) fail(line_no, "missing '# source=...' header before data");
    const auto fields = split(line, ',');
    if (fields.size() < 3 || fields.size() > 4) fail(line_no, "expected p,a_re,a_im[,a_raw]");
    EigenvalueRecord r;
    double re = 0.0, im = 0.0;
    if (!parse_number(fields[0], r.p)) fail(line_no, "p is not an integer");
    if (!parse_number(fields[1], re) || !parse_number(fields[2], im)) {
      fail(line_no, "a_re/a_im are not numbers");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) fail(line_no, "eigenvalue is not finite");
    r.a = {re, im};
    if (fields.size() == 4) {
      std::string_view raw = fields[3];
      std::string_view digits = raw.starts_with('-') ? raw.substr(1) : raw;
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        fail(line_no, "a_raw must be an integer");
      }
      r.raw = std::string(raw);
    }
    if (!is_prime(r.p)) fail(line_no, "p=" + std::to_string(r.p) + " is not prime");
    if (!d.records.empty() && r.p <= d.records.back().p) {
      fail(line_no, "primes must be strictly increasing");
    }
    if (r.p > d.header.X) fail(line_no, "p exceeds X from the header");
    if (!d.header.omega_trivial) r.omega_p = std::nullopt;
    d.records.push_back(std::move(r));
  }
  if (!have_header) throw ParseError("line 1: missing header");
  add_sanity_warnings(d);
  return d;
}

Dataset read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  return read_csv(in);
}

}  // namespace hecke::data
