#include "hecke/repring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hecke/error.hpp"

namespace hecke::repring {
namespace {

int floor_mod(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// pi(chi^-1) has central character eta and is fixed by twisting with eta,
// so it is its own contragredient.
const OpaqueLabel& monomial_octahedral() {
  static const OpaqueLabel label{"pi_chi", "pi_chi", 2};
  return label;
}
constexpr std::string_view kMu = "mu";
constexpr int kMuOrder = 3;
constexpr std::string_view kEta = "eta";
constexpr int kEtaOrder = 2;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ParseError("bad integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::string power_text(std::string_view base, int exponent) {
  std::string out(base);
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
  return out;
}

std::complex<double> int_power(std::complex<double> base, int exponent) {
  if (exponent < 0) {
    return 1.0 / int_power(base, -exponent);
  }
  std::complex<double> out{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

// --- Atom ----------------------------------------------------------------

Atom Atom::sym_pow(int degree, int omega_power) {
  if (degree < 1) {
    throw InvalidArgument("Sym^k atom needs k >= 1, got " + std::to_string(degree));
  }
  Atom a;
  a.kind_ = AtomKind::SymPow;
  a.degree_ = degree;
  a.omega_ = omega_power;
  return a;
}

Atom Atom::character(int omega_power) {
  Atom a;
  a.kind_ = AtomKind::Gl1Char;
  a.omega_ = omega_power;
  return a;
}

Atom Atom::opaque(OpaqueLabel label, int omega_power) {
  if (label.label.empty() || label.dim < 1) {
    throw InvalidArgument("opaque atom needs a label and positive dimension");
  }
  Atom a;
  a.kind_ = AtomKind::OpaqueCuspidal;
  a.omega_ = omega_power;
  a.opaque_ = std::move(label);
  return a;
}

int Atom::aux_exponent(std::string_view symbol) const {
  for (const auto& p : aux_) {
    if (p.symbol == symbol) return p.exponent;
  }
  return 0;
}

const OpaqueLabel& Atom::opaque_label() const {
  if (!opaque_) throw InvalidArgument("atom is not an opaque label");
  return *opaque_;
}

int Atom::dim() const {
  switch (kind_) {
    case AtomKind::SymPow:
      return degree_ + 1;
    case AtomKind::Gl1Char:
      return 1;
    case AtomKind::OpaqueCuspidal:
      return opaque_->dim;
  }
  return 0;
}

int Atom::display_degree() const {
  switch (kind_) {
    case AtomKind::SymPow:
      return degree_;
    case AtomKind::OpaqueCuspidal:
      return opaque_->dim - 1;
    case AtomKind::Gl1Char:
      return 0;
  }
  return 0;
}

Atom Atom::twisted_by_omega(int delta) const {
  Atom a = *this;
  a.omega_ += delta;
  return a;
}

Atom Atom::twisted_by_aux(std::string_view symbol, int order, int exponent) const {
  if (order < 1) throw InvalidArgument("aux character order must be >= 1");
  Atom a = *this;
  auto it = std::find_if(a.aux_.begin(), a.aux_.end(),
                         [&](const AuxPower& p) { return p.symbol == symbol; });
  if (it != a.aux_.end()) {
    if (it->order != order) {
      throw InvalidArgument("aux symbol '" + std::string(symbol) + "' used with two orders");
    }
    it->exponent = floor_mod(it->exponent + exponent, order);
    if (it->exponent == 0) a.aux_.erase(it);
    return a;
  }
  const int e = floor_mod(exponent, order);
  if (e != 0) {
    AuxPower p{std::string(symbol), order, e};
    auto pos = std::lower_bound(a.aux_.begin(), a.aux_.end(), p,
                                [](const AuxPower& x, const AuxPower& y) { return x.symbol < y.symbol; });
    a.aux_.insert(pos, std::move(p));
  }
  return a;
}

Atom Atom::twisted_by(const Atom& character) const {
  if (!character.is_character()) {
    throw InvalidArgument("can only twist by a GL(1) character atom");
  }
  Atom a = twisted_by_omega(character.omega_);
  for (const auto& p : character.aux_) {
    a = a.twisted_by_aux(p.symbol, p.order, p.exponent);
  }
  return a;
}

Atom Atom::untwisted() const {
  Atom a = *this;
  a.omega_ = 0;
  a.aux_.clear();
  return a;
}

Atom Atom::twist_part() const {
  Atom a;
  a.omega_ = omega_;
  a.aux_ = aux_;
  return a;
}

bool Atom::syntactically_trivial_character() const {
  return is_character() && omega_ == 0 && aux_.empty();
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = b.degree_ <=> a.degree_; c != 0) return c;  // higher degree first
  if (auto c = a.omega_ <=> b.omega_; c != 0) return c;
  if (auto c = a.aux_ <=> b.aux_; c != 0) return c;
  return a.opaque_ <=> b.opaque_;
}

// --- VirtualRep ----------------------------------------------------------

VirtualRep::VirtualRep(const Atom& atom, long long multiplicity) { add(atom, multiplicity); }

void VirtualRep::add(const Atom& atom, long long multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(atom, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  for (const auto& [atom, m] : other.terms_) add(atom, m);
  return *this;
}

VirtualRep VirtualRep::scaled(long long factor) const {
  VirtualRep out;
  for (const auto& [atom, m] : terms_) out.add(atom, m * factor);
  return out;
}

VirtualRep VirtualRep::twisted_by(const Atom& character) const {
  VirtualRep out;
  for (const auto& [atom, m] : terms_) out.add(atom.twisted_by(character), m);
  return out;
}

long long VirtualRep::multiplicity(const Atom& atom) const {
  auto it = terms_.find(atom);
  return it == terms_.end() ? 0 : it->second;
}

long long VirtualRep::dim() const {
  long long d = 0;
  for (const auto& [atom, m] : terms_) d += m * atom.dim();
  return d;
}

// --- SatakePoint ---------------------------------------------------------

SatakePoint SatakePoint::from_parameters(std::complex<double> alpha, std::complex<double> beta) {
  SatakePoint s;
  s.alpha = alpha;
  s.beta = beta;
  s.omega_value = alpha * beta;
  return s;
}

std::vector<std::string> SatakePoint::validate(double tolerance) const {
  std::vector<std::string> warnings;
  const auto product = alpha * beta;
  if (std::abs(omega_value - product) > tolerance * std::max(1.0, std::abs(product))) {
    warnings.emplace_back("omega_value differs from alpha*beta");
  }
  for (const auto& [symbol, value] : aux_values) {
    if (std::abs(std::abs(value) - 1.0) > tolerance) {
      warnings.push_back("aux value for '" + symbol + "' is off the unit circle");
    }
  }
  if (prime) {
    const double bound = std::pow(static_cast<double>(*prime), 7.0 / 64.0) * (1.0 + tolerance);
    if (std::abs(alpha) > bound || std::abs(beta) > bound) {
      warnings.emplace_back("Satake parameter exceeds p^(7/64)");
    }
  }
  return warnings;
}

// --- decomposition -------------------------------------------------------

VirtualRep cg_pair(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("cg_pair needs non-negative degrees");
  VirtualRep out;
  for (int j = 0; j <= std::min(a, b); ++j) {
    const int degree = a + b - 2 * j;
    out.add(degree == 0 ? Atom::character(j) : Atom::sym_pow(degree, j), 1);
  }
  return out;
}

VirtualRep tensor(const VirtualRep& lhs, const VirtualRep& rhs) {
  VirtualRep out;
  for (const auto& [x, m] : lhs.terms()) {
    for (const auto& [y, n] : rhs.terms()) {
      if (x.kind() == AtomKind::OpaqueCuspidal || y.kind() == AtomKind::OpaqueCuspidal) {
        throw UnsupportedError("tensor products with opaque atoms are not modelled");
      }
      const Atom twist = x.twist_part().twisted_by(y.twist_part());
      const VirtualRep pieces = cg_pair(x.sym_degree(), y.sym_degree());
      for (const auto& [z, c] : pieces.terms()) {
        out.add(z.twisted_by(twist), m * n * c);
      }
    }
  }
  return out;
}

VirtualRep tensor_power(int k) {
  if (k < 1 || k > 4) {
    throw UnsupportedError("tensor_power supports degrees 1..4, got " + std::to_string(k));
  }
  const VirtualRep pi{Atom::sym_pow(1)};
  VirtualRep out = pi;
  for (int i = 1; i < k; ++i) out = tensor(out, pi);
  return out;
}

Atom dual(const Atom& atom) {
  Atom out = atom;
  switch (atom.kind()) {
    case AtomKind::SymPow:
      out = Atom::sym_pow(atom.sym_degree(), -atom.sym_degree() - atom.omega_power());
      break;
    case AtomKind::Gl1Char:
      out = Atom::character(-atom.omega_power());
      break;
    case AtomKind::OpaqueCuspidal: {
      const auto& label = atom.opaque_label();
      out = Atom::opaque({label.dual_label, label.label, label.dim}, -atom.omega_power());
      break;
    }
  }
  for (const auto& p : atom.aux()) out = out.twisted_by_aux(p.symbol, p.order, -p.exponent);
  return out;
}

Atom canonical(const Atom& atom, const TypeAssumption& t) {
  Atom out = atom;
  if (t.omega_order >= 1) {
    out = out.twisted_by_omega(floor_mod(atom.omega_power(), t.omega_order) - atom.omega_power());
  }
  // The adjoint of a tetrahedral pi is the 3-dimensional representation of
  // A4, which is fixed by twists with the cubic characters.
  if (t.rep_type == RepType::Tetrahedral && atom.kind() == AtomKind::SymPow &&
      atom.sym_degree() == 2) {
    const int e = out.aux_exponent(kMu);
    if (e != 0) out = out.twisted_by_aux(kMu, kMuOrder, -e);
  }
  // Octahedral: the 4-dimensional Sym^3 and pi(chi^-1) are both fixed by
  // the sign character eta of S4.
  if (t.rep_type == RepType::Octahedral &&
      ((atom.kind() == AtomKind::SymPow && atom.sym_degree() == 3) ||
       (atom.kind() == AtomKind::OpaqueCuspidal && atom.opaque_label() == monomial_octahedral()))) {
    const int e = out.aux_exponent(kEta);
    if (e != 0) out = out.twisted_by_aux(kEta, kEtaOrder, -e);
  }
  return out;
}

Atom dual(const Atom& atom, const TypeAssumption& t) { return canonical(dual(atom), t); }

bool isomorphic(const Atom& lhs, const Atom& rhs, const TypeAssumption& t) {
  return canonical(lhs, t) == canonical(rhs, t);
}

bool is_trivial_character(const Atom& atom, const TypeAssumption& t) {
  return atom.is_character() && canonical(atom, t).syntactically_trivial_character();
}

VirtualRep reduce(const Atom& atom, const TypeAssumption& t) {
  if (atom.kind() != AtomKind::SymPow || t.rep_type == RepType::GeneralNonSolvable) {
    return VirtualRep{atom};
  }
  const int k = atom.sym_degree();
  if (t.rep_type == RepType::Dihedral) {
    if (k >= 2) throw MonomialExcludedError("Sym^" + std::to_string(k) + " of a dihedral pi");
    return VirtualRep{atom};
  }
  if (k >= 5) {
    throw UnsupportedError("no reduction known for Sym^" + std::to_string(k) + " under " +
                           std::string(to_string(t.rep_type)) + " type");
  }
  const Atom twist = atom.twist_part();
  VirtualRep out;
  if (t.rep_type == RepType::Tetrahedral && k == 3) {
    // Sym^3 (x) w^-1 = (pi (x) mu) + (pi (x) mu^2)
    out.add(Atom::sym_pow(1, 1).twisted_by_aux(kMu, kMuOrder, 1), 1);
    out.add(Atom::sym_pow(1, 1).twisted_by_aux(kMu, kMuOrder, 2), 1);
  } else if (t.rep_type == RepType::Tetrahedral && k == 4) {
    // Sym^4 (x) w^-1 = Sym^2 + w mu + w mu^2
    out.add(Atom::sym_pow(2, 1), 1);
    out.add(Atom::character(2).twisted_by_aux(kMu, kMuOrder, 1), 1);
    out.add(Atom::character(2).twisted_by_aux(kMu, kMuOrder, 2), 1);
  } else if (t.rep_type == RepType::Octahedral && k == 4) {
    // Sym^4 (x) w^-1 = (pi(chi^-1) (x) w) + (Sym^2 (x) eta)
    out.add(Atom::opaque(monomial_octahedral(), 2), 1);
    out.add(Atom::sym_pow(2, 1).twisted_by_aux(kEta, kEtaOrder, 1), 1);
  } else {
    return VirtualRep{atom};
  }
  return out.twisted_by(twist);
}

VirtualRep reduce(const VirtualRep& rep, const TypeAssumption& t) {
  VirtualRep out;
  for (const auto& [atom, m] : rep.terms()) out += reduce(atom, t).scaled(m);
  return out;
}

// --- numeric characters --------------------------------------------------

std::complex<double> eval_char(const Atom& atom, const SatakePoint& point) {
  std::complex<double> value;
  switch (atom.kind()) {
    case AtomKind::SymPow: {
      // sum_{j=0}^{k} alpha^{k-j} beta^j, no division so alpha = 0 is fine
      const int k = atom.sym_degree();
      std::complex<double> beta_pow{1.0, 0.0};
      value = 0.0;
      for (int j = 0; j <= k; ++j) {
        value += int_power(point.alpha, k - j) * beta_pow;
        beta_pow *= point.beta;
      }
      break;
    }
    case AtomKind::Gl1Char:
      value = 1.0;
      break;
    case AtomKind::OpaqueCuspidal: {
      const auto& label = atom.opaque_label().label;
      auto it = point.opaque_values.find(label);
      if (it == point.opaque_values.end()) {
        throw EvaluationError("no value registered for opaque label '" + label + "'");
      }
      value = it->second;
      break;
    }
  }
  if (atom.omega_power() != 0) value *= int_power(point.omega_value, atom.omega_power());
  for (const auto& p : atom.aux()) {
    auto it = point.aux_values.find(p.symbol);
    if (it == point.aux_values.end()) {
      throw EvaluationError("no value for aux character '" + p.symbol + "'");
    }
    value *= int_power(it->second, p.exponent);
  }
  return value;
}

std::complex<double> eval_char(const VirtualRep& rep, const SatakePoint& point) {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [atom, m] : rep.terms()) {
    total += static_cast<double>(m) * eval_char(atom, point);
  }
  return total;
}

std::complex<double> power_sum(std::complex<double> a_p, std::complex<double> omega_p, int k) {
  if (k < 0) throw InvalidArgument("power_sum needs k >= 0");
  std::complex<double> prev{2.0, 0.0};
  if (k == 0) return prev;
  std::complex<double> cur = a_p;
  for (int i = 2; i <= k; ++i) {
    const auto next = a_p * cur - omega_p * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> power_from_power_sums(std::complex<double> a_p,
                                           std::complex<double> omega_p, int m) {
  if (m < 0) throw InvalidArgument("power_from_power_sums needs m >= 0");
  std::complex<double> total{0.0, 0.0};
  double binom = 1.0;  // C(m, j)
  for (int j = 0; 2 * j <= m; ++j) {
    const auto w_j = int_power(omega_p, j);
    if (2 * j == m) {
      total += binom * w_j;
    } else {
      total += binom * w_j * power_sum(a_p, omega_p, m - 2 * j);
    }
    binom = binom * (m - j) / (j + 1);
  }
  return total;
}

// --- text and JSON -------------------------------------------------------

SymbolTable SymbolTable::standard() {
  SymbolTable s;
  s.declare_aux(std::string(kMu), kMuOrder);
  s.declare_aux(std::string(kEta), kEtaOrder);
  s.declare_opaque(monomial_octahedral().label, monomial_octahedral().dual_label,
                   monomial_octahedral().dim);
  return s;
}

void SymbolTable::declare_aux(std::string symbol, int order) {
  if (symbol.empty() || symbol == "pi" || symbol == "w" || symbol == "1" ||
      symbol.starts_with("Sym") || symbol.starts_with("opaque")) {
    throw InvalidArgument("reserved or empty aux symbol '" + symbol + "'");
  }
  if (order < 2) throw InvalidArgument("aux character order must be >= 2");
  aux_[std::move(symbol)] = order;
}

void SymbolTable::declare_opaque(std::string label, std::string dual_label, int dim) {
  if (label.empty() || dual_label.empty()) throw InvalidArgument("empty opaque label");
  opaque_[label] = OpaqueLabel{label, dual_label, dim};
  opaque_[dual_label] = OpaqueLabel{dual_label, label, dim};
}

std::optional<int> SymbolTable::aux_order(std::string_view symbol) const {
  auto it = aux_.find(symbol);
  if (it == aux_.end()) return std::nullopt;
  return it->second;
}

std::optional<OpaqueLabel> SymbolTable::opaque(std::string_view label) const {
  auto it = opaque_.find(label);
  if (it == opaque_.end()) return std::nullopt;
  return it->second;
}

Atom parse_atom(std::string_view text, const SymbolTable& symbols) {
  std::optional<Atom> base;
  Atom twist = Atom::character(0);
  const std::string_view whole = text;

  auto set_base = [&](Atom a) {
    if (base) throw ParseError("atom '" + std::string(whole) + "' has two base factors");
    base = std::move(a);
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t star = text.find('*', start);
    const std::string_view token =
        trim(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    start = star == std::string_view::npos ? text.size() + 1 : star + 1;
    if (token.empty()) throw ParseError("empty factor in atom '" + std::string(whole) + "'");

    if (token == "1") continue;
    if (token == "pi") {
      set_base(Atom::sym_pow(1));
      continue;
    }
    if (token.starts_with("Sym")) {
      const auto open = token.find('(');
      if (open == std::string_view::npos || token.substr(open) != "(pi)") {
        throw ParseError("expected SymK(pi) in '" + std::string(whole) + "'");
      }
      const int k = parse_int(token.substr(3, open - 3), whole);
      if (k < 1) throw ParseError("Sym degree must be >= 1 in '" + std::string(whole) + "'");
      set_base(Atom::sym_pow(k));
      continue;
    }
    if (token.starts_with("opaque:")) {
      const auto label = token.substr(7);
      auto decl = symbols.opaque(label);
      if (!decl) throw ParseError("undeclared opaque label '" + std::string(label) + "'");
      set_base(Atom::opaque(*decl));
      continue;
    }
    const auto caret = token.find('^');
    const std::string_view symbol = token.substr(0, caret);
    const int exponent =
        caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), whole);
    if (symbol == "w") {
      twist = twist.twisted_by_omega(exponent);
      continue;
    }
    auto order = symbols.aux_order(symbol);
    if (!order) throw ParseError("undeclared character symbol '" + std::string(symbol) + "'");
    twist = twist.twisted_by_aux(symbol, *order, exponent);
  }
  return base ? base->twisted_by(twist) : twist;
}

std::string format_atom(const Atom& atom) {
  std::vector<std::string> parts;
  switch (atom.kind()) {
    case AtomKind::SymPow:
      parts.push_back(atom.sym_degree() == 1 ? "pi"
                                             : "Sym" + std::to_string(atom.sym_degree()) + "(pi)");
      break;
    case AtomKind::OpaqueCuspidal:
      parts.push_back("opaque:" + atom.opaque_label().label);
      break;
    case AtomKind::Gl1Char:
      break;
  }
  if (atom.omega_power() != 0) parts.push_back(power_text("w", atom.omega_power()));
  for (const auto& p : atom.aux()) parts.push_back(power_text(p.symbol, p.exponent));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

std::string render_atom(const Atom& atom) {
  std::vector<std::string> parts;
  switch (atom.kind()) {
    case AtomKind::SymPow:
      parts.push_back(atom.sym_degree() == 1 ? "pi" : "Sym" + std::to_string(atom.sym_degree()));
      break;
    case AtomKind::OpaqueCuspidal:
      parts.push_back(atom.opaque_label().label);
      break;
    case AtomKind::Gl1Char:
      break;
  }
  if (atom.omega_power() != 0) parts.push_back(power_text("w", atom.omega_power()));
  for (const auto& p : atom.aux()) parts.push_back(power_text(p.symbol, p.exponent));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "⊗" + parts[i];
  return out;
}

std::string render(const VirtualRep& rep) {
  std::string out;
  for (const auto& [atom, m] : rep.terms()) {
    if (!out.empty()) out += " ⊕ ";
    const std::string text = render_atom(atom);
    if (m == 1) {
      out += text;
    } else if (text.find("⊗") != std::string::npos) {
      out += std::to_string(m) + "·(" + text + ")";
    } else {
      out += std::to_string(m) + "·" + text;
    }
  }
  return out;
}

nlohmann::json to_json(const VirtualRep& rep) {
  auto doc = nlohmann::json::array();
  for (const auto& [atom, m] : rep.terms()) {
    doc.push_back({{"atom", format_atom(atom)}, {"mult", m}});
  }
  return doc;
}

VirtualRep virtual_rep_from_json(const nlohmann::json& doc, const SymbolTable& symbols) {
  if (!doc.is_array()) throw ParseError("VirtualRep JSON must be an array");
  VirtualRep out;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("atom") || !entry.contains("mult") ||
        !entry["atom"].is_string() || !entry["mult"].is_number_integer()) {
      throw ParseError("VirtualRep entries need string 'atom' and integer 'mult'");
    }
    out.add(parse_atom(entry["atom"].get<std::string>(), symbols), entry["mult"].get<long long>());
  }
  return out;
}

}  // namespace hecke::repring
