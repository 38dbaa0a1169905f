#pragma once

// Generators and CSV ingestion for unitarily normalized Hecke eigenvalues.
//
// CSV layout:
//   # source=...,self_dual=true,normalization=unitary,X=10000,omega_trivial=true,bad=2;3;11
//   p,a_re,a_im[,a_raw]

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hecke::data {

struct EigenvalueRecord {
  std::uint64_t p = 0;
  std::complex<double> a;
  /// omega(p); empty means 1.
  std::optional<std::complex<double>> omega_p;
  /// Unnormalized eigenvalue as an exact decimal integer, when known.
  std::optional<std::string> raw;

  bool operator==(const EigenvalueRecord&) const = default;
};

struct DatasetHeader {
  std::string source;
  bool self_dual = true;
  std::string normalization = "unitary";
  std::uint64_t X = 2;
  bool omega_trivial = true;
  std::vector<std::uint64_t> bad_primes;

  bool operator==(const DatasetHeader&) const = default;
};

struct Dataset {
  DatasetHeader header;
  std::vector<EigenvalueRecord> records;
  /// Non-fatal findings (e.g. |a_p| above 2 p^(7/64)).
  std::vector<std::string> warnings;
};

// --- elliptic curves -----------------------------------------------------

struct ShortWeierstrass {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6  ->  y^2 = x^3 - 27 c4 x - 54 c6,
/// isomorphic away from 2 and 3.
ShortWeierstrass from_long_weierstrass(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                       std::int64_t a4, std::int64_t a6);

/// 4A^3 + 27B^2, as a 128-bit integer.
__int128 short_discriminant_core(const ShortWeierstrass& curve);

/// a_p = p + 1 - #E(F_p) for y^2 = x^3 + Ax + B by direct counting with a
/// per-prime table of quadratic residues.
std::int64_t count_ap(const ShortWeierstrass& curve, std::uint64_t p);

inline constexpr std::uint64_t kEllipticCap = 100000;

/// Good primes 5 <= p <= X with p not dividing 4A^3+27B^2; a_p / sqrt(p).
/// Skipped primes are listed in header.bad_primes.
Dataset ec_ap(std::int64_t a, std::int64_t b, std::uint64_t X);

// --- Ramanujan tau --------------------------------------------------------

inline constexpr std::uint64_t kTauCap = 10000;

/// tau(1..n) from q * prod (1 - q^m)^24, exact (128-bit with overflow
/// checks). Index 0 holds tau(1).
std::vector<__int128> tau_coefficients(std::uint64_t n);

/// tau(p) / p^(11/2) for p <= X.
Dataset tau_ap(std::uint64_t X);

std::string to_string_i128(__int128 value);

// --- synthetic ------------------------------------------------------------

/// a_p = 2 cos(theta_p) on the first n primes, theta_p ~ (2/pi) sin^2 on
/// [0, pi] by rejection from a uniform proposal. Each prime draws from its
/// own stream seeded by (seed, p).
Dataset sato_tate_sample(std::size_t n, std::uint64_t seed);

/// CDF of the Sato-Tate measure in theta: (theta - sin theta cos theta) / pi.
double sato_tate_cdf(double theta);

/// Sato-Tate measure of {2 cos theta > c}.
double sato_tate_tail_above(double c);

// --- CSV --------------------------------------------------------------------

void write_csv(std::ostream& out, const DatasetHeader& header,
               const std::vector<EigenvalueRecord>& records);
void write_csv(const std::filesystem::path& path, const DatasetHeader& header,
               const std::vector<EigenvalueRecord>& records);

/// Throws hecke::ParseError naming the line on malformed rows, non-prime or
/// non-increasing p, or p above X.
Dataset read_csv(std::istream& in);
Dataset read_csv(const std::filesystem::path& path);

}  // namespace hecke::data
