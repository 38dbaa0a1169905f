#pragma once

// Symbolic algebra of tensor and symmetric powers of a GL(2) object pi.
//
// An Atom is Sym^k(pi), a GL(1) character, or an opaque cuspidal label, each
// twisted by a power of the central character w and by a product of auxiliary
// finite-order characters (e.g. mu of order 3). A VirtualRep is an
// integer-multiplicity sum of atoms.

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hecke/assumption.hpp"

namespace hecke::repring {

enum class AtomKind { SymPow, Gl1Char, OpaqueCuspidal };

/// One factor symbol^exponent of the auxiliary character; exponent is kept in
/// [1, order).
struct AuxPower {
  std::string symbol;
  int order = 1;
  int exponent = 0;

  bool operator==(const AuxPower&) const = default;
  auto operator<=>(const AuxPower&) const = default;
};

/// Declared cuspidal object outside the Sym^k family, e.g. the monomial
/// representation pi(chi^-1). Only its dual partner and dimension are known.
struct OpaqueLabel {
  std::string label;
  std::string dual_label;
  int dim = 2;

  bool operator==(const OpaqueLabel&) const = default;
  auto operator<=>(const OpaqueLabel&) const = default;
};

class Atom {
 public:
  static Atom sym_pow(int degree, int omega_power = 0);
  static Atom character(int omega_power = 0);
  static Atom opaque(OpaqueLabel label, int omega_power = 0);

  AtomKind kind() const { return kind_; }
  bool is_character() const { return kind_ == AtomKind::Gl1Char; }
  /// k for Sym^k; 0 for characters and opaque labels.
  int sym_degree() const { return degree_; }
  int omega_power() const { return omega_; }
  const std::vector<AuxPower>& aux() const { return aux_; }
  int aux_exponent(std::string_view symbol) const;
  const OpaqueLabel& opaque_label() const;
  int dim() const;

  /// Degree used for presentation ordering: k for Sym^k, 1 for opaque GL(2)
  /// labels, 0 for characters.
  int display_degree() const;

  Atom twisted_by_omega(int delta) const;
  Atom twisted_by_aux(std::string_view symbol, int order, int exponent) const;
  /// Twist by a character atom (its w-power and aux powers are added).
  Atom twisted_by(const Atom& character) const;
  /// Same atom with all twists removed.
  Atom untwisted() const;
  /// The trivial character with this atom's twists.
  Atom twist_part() const;

  /// w^0 and no aux factors, with no relations applied.
  bool syntactically_trivial_character() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  Atom() = default;

  AtomKind kind_ = AtomKind::Gl1Char;
  int degree_ = 0;
  int omega_ = 0;
  std::vector<AuxPower> aux_;  // sorted by symbol
  std::optional<OpaqueLabel> opaque_;
};

class VirtualRep {
 public:
  using Terms = std::map<Atom, long long>;

  VirtualRep() = default;
  explicit VirtualRep(const Atom& atom, long long multiplicity = 1);

  void add(const Atom& atom, long long multiplicity);
  VirtualRep& operator+=(const VirtualRep& other);
  friend VirtualRep operator+(VirtualRep lhs, const VirtualRep& rhs) { return lhs += rhs; }
  VirtualRep scaled(long long factor) const;
  VirtualRep twisted_by(const Atom& character) const;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long multiplicity(const Atom& atom) const;
  long long dim() const;

  bool operator==(const VirtualRep&) const = default;

 private:
  Terms terms_;
};

/// Local data at one prime: Satake parameters and values of the auxiliary
/// characters and opaque labels.
struct SatakePoint {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{1.0, 0.0};
  std::complex<double> omega_value{1.0, 0.0};
  std::map<std::string, std::complex<double>, std::less<>> aux_values;
  std::map<std::string, std::complex<double>, std::less<>> opaque_values;
  std::optional<std::uint64_t> prime;

  static SatakePoint from_parameters(std::complex<double> alpha, std::complex<double> beta);

  /// Non-fatal consistency warnings: omega != alpha*beta, aux values off the
  /// unit circle, parameters above p^(7/64) when a prime is attached.
  std::vector<std::string> validate(double tolerance = 1e-9) const;
};

// --- decomposition -------------------------------------------------------

/// Sym^a (x) Sym^b = sum_{j=0}^{min(a,b)} Sym^{a+b-2j} (x) w^j.
VirtualRep cg_pair(int a, int b);

/// Product of two virtual representations built from Sym^k atoms and
/// characters. Opaque atoms are rejected.
VirtualRep tensor(const VirtualRep& lhs, const VirtualRep& rhs);

/// pi^{(x)k} for 1 <= k <= 4.
VirtualRep tensor_power(int k);

/// Contragredient: Sym^k (x) w^a (x) eta  ->  Sym^k (x) w^{-k-a} (x) eta^-1.
Atom dual(const Atom& atom);

/// Canonical representative of the isomorphism class of `atom` under the
/// relations of `t` (w-power reduced modulo the order of w; under the
/// tetrahedral type Sym^2 absorbs twists by mu).
Atom canonical(const Atom& atom, const TypeAssumption& t);

/// dual() followed by canonical().
Atom dual(const Atom& atom, const TypeAssumption& t);

bool isomorphic(const Atom& lhs, const Atom& rhs, const TypeAssumption& t);

/// Trivial GL(1) character under the relations of `t`.
bool is_trivial_character(const Atom& atom, const TypeAssumption& t);

/// Isobaric decomposition of Sym^3 / Sym^4 atoms that fail to be cuspidal
/// under `t`. Idempotent.
VirtualRep reduce(const Atom& atom, const TypeAssumption& t);
VirtualRep reduce(const VirtualRep& rep, const TypeAssumption& t);

// --- numeric characters --------------------------------------------------

std::complex<double> eval_char(const Atom& atom, const SatakePoint& point);
std::complex<double> eval_char(const VirtualRep& rep, const SatakePoint& point);

/// alpha^k + beta^k for the roots of x^2 - a_p x + omega_p, by the Newton
/// recurrence p_k = a_p p_{k-1} - omega_p p_{k-2}.
std::complex<double> power_sum(std::complex<double> a_p, std::complex<double> omega_p, int k);

/// a_p^m rebuilt from power sums: sum_{j < m/2} C(m,j) w^j p_{m-2j}, plus
/// C(m,m/2) w^{m/2} when m is even.
std::complex<double> power_from_power_sums(std::complex<double> a_p, std::complex<double> omega_p,
                                           int m);

// --- text and JSON -------------------------------------------------------

/// Registry of auxiliary character symbols and opaque labels accepted by the
/// parser. "pi" and "w" are reserved.
class SymbolTable {
 public:
  /// mu of order 3, eta of order 2, and the self-dual opaque label pi_chi.
  static SymbolTable standard();

  void declare_aux(std::string symbol, int order);
  /// Registers both `label` and `dual_label` (equal labels mean self-dual).
  void declare_opaque(std::string label, std::string dual_label, int dim = 2);

  std::optional<int> aux_order(std::string_view symbol) const;
  std::optional<OpaqueLabel> opaque(std::string_view label) const;

 private:
  std::map<std::string, int, std::less<>> aux_;
  std::map<std::string, OpaqueLabel, std::less<>> opaque_;
};

/// Parses `Sym3(pi)*w^-1*mu^2`, `pi`, `w^2`, `opaque:pi_chi*w`, `1`.
Atom parse_atom(std::string_view text, const SymbolTable& symbols);
/// Inverse of parse_atom.
std::string format_atom(const Atom& atom);
/// Compact notation used in certificates: `Sym3⊗w^2`, `pi⊗mu`, `w^4`.
std::string render_atom(const Atom& atom);
/// `Sym3 ⊕ 2·(pi⊗w)`.
std::string render(const VirtualRep& rep);

nlohmann::json to_json(const VirtualRep& rep);
VirtualRep virtual_rep_from_json(const nlohmann::json& doc, const SymbolTable& symbols);

}  // namespace hecke::repring
