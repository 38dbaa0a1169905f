#include "hecke/assumption.hpp"

#include "hecke/error.hpp"

namespace hecke {

void TypeAssumption::validate() const {
  if (omega_order < 0) {
    throw InvalidArgument("omega_order must be >= 0 (0 = non-torsion)");
  }
  if (rep_type == RepType::Dihedral) {
    return;
  }
  if (self_dual && omega_order != 1) {
    throw InvalidArgument("a self-dual non-dihedral representation has trivial central character");
  }
  if (!self_dual && omega_order == 1) {
    throw InvalidArgument(
        "trivial central character makes a non-dihedral representation self-dual");
  }
}

std::string_view to_string(RepType type) {
  switch (type) {
    case RepType::GeneralNonSolvable:
      return "general";
    case RepType::Tetrahedral:
      return "tetrahedral";
    case RepType::Octahedral:
      return "octahedral";
    case RepType::Dihedral:
      return "dihedral";
  }
  return "?";
}

RepType parse_rep_type(std::string_view text) {
  if (text == "general") return RepType::GeneralNonSolvable;
  if (text == "tetrahedral") return RepType::Tetrahedral;
  if (text == "octahedral") return RepType::Octahedral;
  if (text == "dihedral") return RepType::Dihedral;
  throw InvalidArgument("unknown representation type '" + std::string(text) + "'");
}

std::string describe(const TypeAssumption& t) {
  std::string out(to_string(t.rep_type));
  out += t.self_dual ? ", self-dual" : ", not self-dual";
  if (t.omega_order == 1) {
    out += ", w trivial";
  } else if (t.omega_order == 0) {
    out += ", w of infinite order";
  } else {
    out += ", w of order " + std::to_string(t.omega_order);
  }
  return out;
}

}  // namespace hecke
