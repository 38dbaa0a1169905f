#pragma once

// Order of the pole at s = 1 of Rankin-Selberg and standard L-functions of
// virtual representations, with a factorization certificate.
//
// Every factor in a certificate is either L(s, X x Y) for two cuspidal atoms
// (simple pole iff Y is the dual of X) or L(s, Z) for a single atom (pole iff
// Z is the trivial character). Finitely many Euler factors never change the
// order at s = 1, so ramified places are not modelled.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/assumption.hpp"
#include "hecke/repring.hpp"

namespace hecke::poles {

struct PoleFactor {
  repring::Atom left;
  std::optional<repring::Atom> right;  // empty for standard L-functions
  long long multiplicity = 0;
  int pole_contrib = 0;  // 0 or 1
  /// Rendering of the unreduced factor this one came from; equals the
  /// factor's own rendering when no reduction applied.
  std::string family;
  long long family_multiplicity = 0;
};

struct PoleCertificate {
  std::vector<PoleFactor> factors;  // presentation order
  long long total_order = 0;
  TypeAssumption assumption;
  std::vector<std::string> notes;
};

/// ord_{s=1} L(s, A x B), expanded bilinearly over atoms after reduction
/// under `t`. Pairings with a GL(1) character fold into standard
/// L-functions.
PoleCertificate rs_pole_order(const repring::VirtualRep& lhs, const repring::VirtualRep& rhs,
                              const TypeAssumption& t);

/// ord_{s=1} L(s, A) for the standard L-function of each atom.
PoleCertificate std_pole_order(const repring::VirtualRep& rep, const TypeAssumption& t);

/// ord_{s=1} L^T(s, pi^{x k}) for 2 <= k <= 8.
///
/// k = 2 uses L(pi x pi); k = 3, 4 use the standard L-functions of the
/// Clebsch-Gordan decomposition of pi^{(x)k}; k >= 5 pairs
/// pi^{(x)ceil(k/2)} against pi^{(x)floor(k/2)}.
PoleCertificate tensor_power_pole(int k, const TypeAssumption& t);

/// Factors joined by " · " in presentation order, e.g.
/// "L(Sym3) · L(pi⊗w)^2". Empty certificate renders as "".
std::string certificate_render(const PoleCertificate& certificate);

/// {"factors":[{"left","right","mult","pole","family"}], "total", ...} with
/// factors in canonical atom order.
nlohmann::json certificate_json(const PoleCertificate& certificate);

/// Rendering of one factor without its multiplicity, e.g. "L(Sym4 × Sym2⊗w)".
std::string render_factor(const PoleFactor& factor);

/// Multiplicities of the certificate's families, in presentation order.
std::vector<long long> family_multiplicities(const PoleCertificate& certificate);

}  // namespace hecke::poles
