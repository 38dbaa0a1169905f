#pragma once

#include <string>
#include <string_view>

namespace hecke {

enum class RepType { GeneralNonSolvable, Tetrahedral, Octahedral, Dihedral };

/// Hypotheses on pi that govern cuspidality of its symmetric powers and which
/// twists are isomorphic.
///
/// omega_order is the order of the central character; 1 means trivial and 0
/// means "non-torsion / unspecified", in which case no power of omega other
/// than omega^0 is trivial.
struct TypeAssumption {
  RepType rep_type = RepType::GeneralNonSolvable;
  bool self_dual = true;
  int omega_order = 1;

  /// Throws InvalidArgument when the bundle is inconsistent: outside the
  /// dihedral case pi is self-dual exactly when omega is trivial.
  void validate() const;

  static TypeAssumption self_dual_of(RepType type) { return {type, true, 1}; }
  static TypeAssumption non_self_dual_of(RepType type, int omega_order = 0) {
    return {type, false, omega_order};
  }

  bool operator==(const TypeAssumption&) const = default;
};

std::string_view to_string(RepType type);
RepType parse_rep_type(std::string_view text);
std::string describe(const TypeAssumption& t);

}  // namespace hecke
