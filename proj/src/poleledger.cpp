#include "hecke/poleledger.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hecke/error.hpp"

namespace hecke::poles {
namespace {

using repring::Atom;
using repring::AtomKind;
using repring::VirtualRep;

// L(s, left x right), or L(s, left) when right is empty.
struct FactorKey {
  Atom left;
  std::optional<Atom> right;

  auto operator<=>(const FactorKey&) const = default;
  bool operator==(const FactorKey&) const = default;
};

// Cuspidality of Sym^k pi is only known for small k, and depends on the
// type: tetrahedral pi has non-cuspidal Sym^3 and Sym^4, octahedral pi has
// non-cuspidal Sym^4.
void require_known_cuspidal(const Atom& atom, const TypeAssumption& t) {
  if (atom.kind() != AtomKind::SymPow) return;
  const int k = atom.sym_degree();
  bool known = k <= 2;
  if (k == 3) known = t.rep_type != RepType::Tetrahedral;
  if (k == 4) known = t.rep_type == RepType::GeneralNonSolvable;
  if (!known) {
    throw UnsupportedError("cuspidality of Sym^" + std::to_string(k) + " is unknown under " +
                           std::string(to_string(t.rep_type)) + " type");
  }
}

// Folds pairings with characters and orders the two sides so that the pair
// is unordered: higher degree on the left, ties by canonical atom order.
FactorKey make_key(const Atom& x, const std::optional<Atom>& y) {
  if (!y) return {x, std::nullopt};
  if (x.is_character()) return {y->twisted_by(x), std::nullopt};
  if (y->is_character()) return {x.twisted_by(*y), std::nullopt};
  const bool x_first = x.display_degree() != y->display_degree()
                           ? x.display_degree() > y->display_degree()
                           : !(*y < x);
  return x_first ? FactorKey{x, y} : FactorKey{*y, x};
}

int pole_contribution(const FactorKey& key, const TypeAssumption& t) {
  require_known_cuspidal(key.left, t);
  if (!key.right) {
    return repring::is_trivial_character(key.left, t) ? 1 : 0;
  }
  require_known_cuspidal(*key.right, t);
  return repring::isomorphic(key.left, repring::dual(*key.right), t) ? 1 : 0;
}

std::string render_key(const FactorKey& key) {
  std::string out = "L(" + repring::render_atom(key.left);
  if (key.right) out += " × " + repring::render_atom(*key.right);
  return out + ")";
}

int degree_sum(const FactorKey& key) {
  return key.left.display_degree() + (key.right ? key.right->display_degree() : 0);
}

int max_degree(const FactorKey& key) {
  return std::max(key.left.display_degree(), key.right ? key.right->display_degree() : 0);
}

// Presentation order: total degree descending, then the larger constituent
// first.
bool presentation_less(const FactorKey& a, const FactorKey& b) {
  const auto ka = std::make_tuple(-degree_sum(a), -max_degree(a));
  const auto kb = std::make_tuple(-degree_sum(b), -max_degree(b));
  if (ka != kb) return ka < kb;
  return a < b;
}

class CertificateBuilder {
 public:
  explicit CertificateBuilder(const TypeAssumption& t) : t_(t) {
    t_.validate();
    if (t_.rep_type == RepType::Dihedral) {
      throw MonomialExcludedError("pole orders are not computed for dihedral pi");
    }
  }

  void add_family(const Atom& x, const std::optional<Atom>& y, long long multiplicity) {
    families_[make_key(x, y)] += multiplicity;
  }

  PoleCertificate finish() {
    std::vector<std::pair<FactorKey, long long>> ordered(families_.begin(), families_.end());
    std::erase_if(ordered, [](const auto& f) { return f.second == 0; });
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      return presentation_less(a.first, b.first);
    });

    PoleCertificate cert;
    cert.assumption = t_;
    for (const auto& [family, multiplicity] : ordered) {
      for (auto& factor : expand(family)) {
        factor.multiplicity *= multiplicity;
        factor.family_multiplicity = multiplicity;
        cert.total_order += factor.multiplicity * factor.pole_contrib;
        cert.factors.push_back(std::move(factor));
      }
    }
    return cert;
  }

 private:
  // Splits one family into factors between fully reduced atoms.
  std::vector<PoleFactor> expand(const FactorKey& family) {
    std::map<FactorKey, long long> parts;
    const VirtualRep lhs = repring::reduce(family.left, t_);
    if (family.right) {
      const VirtualRep rhs = repring::reduce(*family.right, t_);
      for (const auto& [x, m] : lhs.terms()) {
        for (const auto& [y, n] : rhs.terms()) parts[make_key(x, y)] += m * n;
      }
    } else {
      for (const auto& [x, m] : lhs.terms()) parts[make_key(x, std::nullopt)] += m;
    }

    std::vector<std::pair<FactorKey, long long>> ordered(parts.begin(), parts.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      return presentation_less(a.first, b.first);
    });

    std::vector<PoleFactor> out;
    const std::string label = render_key(family);
    for (const auto& [key, m] : ordered) {
      if (m == 0) continue;
      out.push_back(PoleFactor{key.left, key.right, m, pole_contribution(key, t_), label, 0});
    }
    return out;
  }

  TypeAssumption t_;
  std::map<FactorKey, long long> families_;
};

bool stated_case(int k, RepType type) {
  switch (k) {
    case 2:
    case 3:
    case 4:
    case 7:
      return true;
    case 6:
      return type != RepType::Octahedral;
    case 8:
      return type == RepType::GeneralNonSolvable;
    default:
      return false;
  }
}

}  // namespace

PoleCertificate rs_pole_order(const VirtualRep& lhs, const VirtualRep& rhs,
                              const TypeAssumption& t) {
  CertificateBuilder builder(t);
  for (const auto& [x, m] : lhs.terms()) {
    for (const auto& [y, n] : rhs.terms()) builder.add_family(x, y, m * n);
  }
  return builder.finish();
}

PoleCertificate std_pole_order(const VirtualRep& rep, const TypeAssumption& t) {
  CertificateBuilder builder(t);
  for (const auto& [x, m] : rep.terms()) builder.add_family(x, std::nullopt, m);
  return builder.finish();
}

PoleCertificate tensor_power_pole(int k, const TypeAssumption& t) {
  if (k < 2 || k > 8) {
    throw InvalidArgument("tensor_power_pole supports 2 <= k <= 8, got " + std::to_string(k));
  }
  if (t.rep_type == RepType::Dihedral) {
    throw MonomialExcludedError("L(s, pi^{x" + std::to_string(k) + "}) for dihedral pi");
  }
  PoleCertificate cert;
  if (k == 2) {
    cert = rs_pole_order(repring::tensor_power(1), repring::tensor_power(1), t);
  } else if (k <= 4) {
    cert = std_pole_order(repring::tensor_power(k), t);
  } else {
    cert = rs_pole_order(repring::tensor_power((k + 1) / 2), repring::tensor_power(k / 2), t);
  }
  if (!stated_case(k, t.rep_type)) {
    cert.notes.push_back("derived: no reference value for k=" + std::to_string(k) + " under " +
                         std::string(to_string(t.rep_type)) + " type");
  }
  return cert;
}

std::string render_factor(const PoleFactor& factor) {
  return render_key(FactorKey{factor.left, factor.right});
}

std::string certificate_render(const PoleCertificate& certificate) {
  std::string out;
  for (const auto& f : certificate.factors) {
    if (!out.empty()) out += " · ";
    out += render_factor(f);
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

nlohmann::json certificate_json(const PoleCertificate& certificate) {
  std::vector<const PoleFactor*> sorted;
  for (const auto& f : certificate.factors) sorted.push_back(&f);
  std::stable_sort(sorted.begin(), sorted.end(), [](const PoleFactor* a, const PoleFactor* b) {
    return FactorKey{a->left, a->right} < FactorKey{b->left, b->right};
  });

  auto factors = nlohmann::json::array();
  for (const auto* f : sorted) {
    factors.push_back({
        {"left", repring::format_atom(f->left)},
        {"right", f->right ? nlohmann::json(repring::format_atom(*f->right)) : nlohmann::json()},
        {"mult", f->multiplicity},
        {"pole", f->pole_contrib},
        {"family", f->family},
    });
  }
  const auto& t = certificate.assumption;
  return {
      {"factors", factors},
      {"total", certificate.total_order},
      {"assumption",
       {{"type", std::string(to_string(t.rep_type))},
        {"self_dual", t.self_dual},
        {"omega_order", t.omega_order}}},
      {"notes", certificate.notes},
  };
}

std::vector<long long> family_multiplicities(const PoleCertificate& certificate) {
  std::vector<long long> out;
  const std::string* last = nullptr;
  for (const auto& f : certificate.factors) {
    if (last == nullptr || *last != f.family) out.push_back(f.family_multiplicity);
    last = &f.family;
  }
  return out;
}

}  // namespace hecke::poles
