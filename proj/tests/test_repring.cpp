#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hecke/error.hpp"
#include "hecke/repring.hpp"

using namespace hecke;
using namespace hecke::repring;
using cd = std::complex<double>;

namespace {

const SymbolTable kSymbols = SymbolTable::standard();

Atom atom(std::string_view text) { return parse_atom(text, kSymbols); }

cd random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

// Parameters near the unit circle, as allowed by the 7/64 bound at small p.
SatakePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.8, 1.25);
  return SatakePoint::from_parameters(radius(rng) * random_unit(rng), radius(rng) * random_unit(rng));
}

// Weyl character formula, independent of the summation in eval_char.
cd sym_oracle(int k, cd alpha, cd beta) {
  if (std::abs(alpha - beta) < 1e-6) return static_cast<double>(k + 1) * std::pow(alpha, k);
  return (std::pow(alpha, k + 1) - std::pow(beta, k + 1)) / (alpha - beta);
}

// One conjugacy class of a binary polyhedral group: Satake angle theta, class
// size, and the values of the auxiliary characters on its image.
struct GroupClass {
  double theta;
  int size;
  cd mu = 1.0;
  double eta = 1.0;
  double pi_chi = 2.0;
};

SatakePoint class_point(const GroupClass& c) {
  auto s = SatakePoint::from_parameters(std::polar(1.0, c.theta), std::polar(1.0, -c.theta));
  s.aux_values["mu"] = c.mu;
  s.aux_values["eta"] = c.eta;
  s.opaque_values["pi_chi"] = c.pi_chi;
  return s;
}

std::vector<GroupClass> binary_tetrahedral() {
  const double pi = std::numbers::pi;
  const cd z = std::polar(1.0, 2.0 * pi / 3.0);
  return {{0.0, 1},          {pi, 1},
          {pi / 2, 6},       {pi / 3, 4, z},
          {pi / 3, 4, z * z}, {2 * pi / 3, 4, z},
          {2 * pi / 3, 4, z * z}};
}

// Images in S4: eta is the sign, pi_chi the character of the 2-dimensional
// representation through S3.
std::vector<GroupClass> binary_octahedral() {
  const double pi = std::numbers::pi;
  return {{0.0, 1, 1.0, 1.0, 2.0},          {pi, 1, 1.0, 1.0, 2.0},
          {pi / 2, 6, 1.0, 1.0, 2.0},       {pi / 2, 12, 1.0, -1.0, 0.0},
          {pi / 3, 8, 1.0, 1.0, -1.0},      {2 * pi / 3, 8, 1.0, 1.0, -1.0},
          {pi / 4, 6, 1.0, -1.0, 0.0},      {3 * pi / 4, 6, 1.0, -1.0, 0.0}};
}

}  // namespace

TEST_CASE("Clebsch-Gordan dimensions are exact for a, b <= 8") {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const auto rep = cg_pair(a, b);
      CHECK(rep.dim() == (a + 1) * (b + 1));
      CHECK(rep.size() == static_cast<std::size_t>(std::min(a, b) + 1));
    }
  }
  CHECK(cg_pair(0, 0) == VirtualRep(Atom::character(0)));
  CHECK_THROWS_AS(cg_pair(-1, 2), InvalidArgument);
}

TEST_CASE("tensor powers of pi") {
  VirtualRep t2;
  t2.add(Atom::sym_pow(2), 1);
  t2.add(Atom::character(1), 1);
  CHECK(tensor_power(2) == t2);

  VirtualRep t3;
  t3.add(Atom::sym_pow(3), 1);
  t3.add(Atom::sym_pow(1, 1), 2);
  CHECK(tensor_power(3) == t3);

  VirtualRep t4;
  t4.add(Atom::sym_pow(4), 1);
  t4.add(Atom::sym_pow(2, 1), 3);
  t4.add(Atom::character(2), 2);
  CHECK(tensor_power(4) == t4);

  CHECK(tensor_power(1) == VirtualRep(Atom::sym_pow(1)));
  CHECK_THROWS_AS(tensor_power(5), UnsupportedError);
  CHECK_THROWS_AS(tensor_power(0), UnsupportedError);
  CHECK_THROWS_AS(tensor(VirtualRep(atom("opaque:pi_chi")), tensor_power(1)), UnsupportedError);
}

TEST_CASE("characters of tensor powers match trace^k on 1000 random points") {
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto point = random_point(rng);
    const cd trace = point.alpha + point.beta;
    for (int k = 1; k <= 4; ++k) {
      worst = std::max(worst, std::abs(eval_char(tensor_power(k), point) - std::pow(trace, k)));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("eval_char of Sym^k agrees with the Weyl character formula") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto point = random_point(rng);
    for (int k = 1; k <= 8; ++k) {
      const cd expected = sym_oracle(k, point.alpha, point.beta);
      CHECK(std::abs(eval_char(Atom::sym_pow(k), point) - expected) < 1e-9 * (1 + std::abs(expected)));
    }
    // Twisting by w multiplies by alpha*beta.
    const cd twisted = eval_char(Atom::sym_pow(3, 2), point);
    CHECK(std::abs(twisted - sym_oracle(3, point.alpha, point.beta) * std::pow(point.alpha * point.beta, 2)) <
          1e-9);
  }
}

TEST_CASE("Newton power sums match the quadratic-root oracle up to k = 16") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const cd a{u(rng), u(rng) * 0.5};
    const cd w = random_unit(rng);
    const cd disc = std::sqrt(a * a - 4.0 * w);
    const cd alpha = (a + disc) / 2.0;
    const cd beta = (a - disc) / 2.0;
    for (int k = 0; k <= 16; ++k) {
      const cd expected = std::pow(alpha, k) + std::pow(beta, k);
      worst = std::max(worst, std::abs(power_sum(a, w, k) - expected) / std::max(1.0, std::abs(expected)));
    }
    for (int m = 0; m <= 8; ++m) {
      CHECK(std::abs(power_from_power_sums(a, w, m) - std::pow(a, m)) <
            1e-9 * std::max(1.0, std::pow(std::abs(a), m)));
    }
  }
  CHECK(worst < 1e-9);
  CHECK_THROWS_AS(power_sum(1.0, 1.0, -1), InvalidArgument);
}

TEST_CASE("power sums of real eigenvalues with trivial w have non-negative sixth powers") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    for (int m = 1; m <= 4; ++m) {
      const cd p = power_sum(a, 1.0, m);
      CHECK(std::abs(p.imag()) < 1e-12);
      CHECK(std::pow(p.real(), 6) >= 0.0);
    }
  }
}

TEST_CASE("duals") {
  CHECK(dual(Atom::sym_pow(3, 1)) == Atom::sym_pow(3, -4));
  CHECK(dual(Atom::character(2)) == Atom::character(-2));
  CHECK(dual(atom("pi*mu")) == atom("pi*w^-1*mu^2"));
  for (auto text : {"Sym3(pi)*w^-1*mu^2", "w^3", "opaque:pi_chi*w", "Sym2(pi)*eta"}) {
    CHECK(dual(dual(atom(text))) == atom(text));
  }
  const auto sd = TypeAssumption::self_dual_of(RepType::GeneralNonSolvable);
  CHECK(isomorphic(dual(Atom::sym_pow(3)), Atom::sym_pow(3), sd));
  const auto nsd = TypeAssumption::non_self_dual_of(RepType::GeneralNonSolvable);
  CHECK_FALSE(isomorphic(dual(Atom::sym_pow(1)), Atom::sym_pow(1), nsd));
  CHECK(isomorphic(dual(Atom::sym_pow(1)), Atom::sym_pow(1, -1), nsd));
}

TEST_CASE("canonical forms under type assumptions") {
  TypeAssumption t{RepType::GeneralNonSolvable, false, 3};
  CHECK(canonical(Atom::character(4), t) == Atom::character(1));
  CHECK(canonical(Atom::character(-1), t) == Atom::character(2));
  CHECK(is_trivial_character(Atom::character(3), t));
  CHECK_FALSE(is_trivial_character(Atom::character(3), TypeAssumption::non_self_dual_of(RepType::GeneralNonSolvable)));

  const auto tet = TypeAssumption::self_dual_of(RepType::Tetrahedral);
  CHECK(isomorphic(atom("Sym2(pi)*mu"), Atom::sym_pow(2), tet));
  CHECK_FALSE(isomorphic(atom("pi*mu"), Atom::sym_pow(1), tet));
  CHECK_FALSE(is_trivial_character(atom("mu"), tet));
  CHECK(is_trivial_character(atom("mu^3"), tet));

  const auto oct = TypeAssumption::self_dual_of(RepType::Octahedral);
  CHECK(isomorphic(atom("Sym3(pi)*eta"), Atom::sym_pow(3), oct));
  CHECK(isomorphic(atom("opaque:pi_chi*eta"), atom("opaque:pi_chi"), oct));
  CHECK_FALSE(isomorphic(atom("Sym2(pi)*eta"), Atom::sym_pow(2), oct));
}

TEST_CASE("reductions preserve dimension and are idempotent") {
  const TypeAssumption types[] = {TypeAssumption::self_dual_of(RepType::GeneralNonSolvable),
                                  TypeAssumption::self_dual_of(RepType::Tetrahedral),
                                  TypeAssumption::self_dual_of(RepType::Octahedral)};
  for (const auto& t : types) {
    for (int k = 1; k <= 4; ++k) {
      const auto rep = tensor_power(k);
      const auto reduced = reduce(rep, t);
      CHECK(reduced.dim() == rep.dim());
      CHECK(reduce(reduced, t) == reduced);
    }
  }
  CHECK(reduce(Atom::sym_pow(4), types[0]) == VirtualRep(Atom::sym_pow(4)));
  CHECK_THROWS_AS(reduce(Atom::sym_pow(2), TypeAssumption::self_dual_of(RepType::Dihedral)),
                  MonomialExcludedError);
  CHECK_THROWS_AS(reduce(Atom::sym_pow(5), types[1]), UnsupportedError);
}

TEST_CASE("tetrahedral reductions agree on every class of the binary tetrahedral group") {
  const auto t = TypeAssumption::self_dual_of(RepType::Tetrahedral);
  for (const auto& c : binary_tetrahedral()) {
    const auto point = class_point(c);
    for (int k : {3, 4}) {
      const auto lhs = eval_char(Atom::sym_pow(k), point);
      const auto rhs = eval_char(reduce(Atom::sym_pow(k), t), point);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // Sym^2 (x) mu = Sym^2 as characters.
    CHECK(std::abs(eval_char(atom("Sym2(pi)*mu"), point) - eval_char(Atom::sym_pow(2), point)) < 1e-12);
  }
}

TEST_CASE("octahedral Sym^4 needs the sign twist on the Sym^2 summand") {
  const auto t = TypeAssumption::self_dual_of(RepType::Octahedral);
  double literal_gap = 0.0;
  for (const auto& c : binary_octahedral()) {
    const auto point = class_point(c);
    const auto sym4 = eval_char(Atom::sym_pow(4), point);
    CHECK(std::abs(sym4 - eval_char(reduce(Atom::sym_pow(4), t), point)) < 1e-12);
    // The untwisted form pi_chi w^2 + Sym^2 w is not a character identity.
    VirtualRep literal;
    literal.add(atom("opaque:pi_chi*w^2"), 1);
    literal.add(atom("Sym2(pi)*w"), 1);
    literal_gap = std::max(literal_gap, std::abs(sym4 - eval_char(literal, point)));
    // Sym^3 is fixed by eta.
    CHECK(std::abs(eval_char(atom("Sym3(pi)*eta"), point) - eval_char(Atom::sym_pow(3), point)) < 1e-12);
  }
  CHECK(literal_gap > 1.0);
}

TEST_CASE("SatakePoint validation") {
  auto s = SatakePoint::from_parameters(1.0, 1.0);
  CHECK(s.validate().empty());
  s.omega_value = 2.0;
  CHECK(s.validate().size() == 1);
  s = SatakePoint::from_parameters(3.0, 1.0 / 3.0);
  s.prime = 5;
  CHECK_FALSE(s.validate().empty());
  s.aux_values["mu"] = 2.0;
  CHECK(s.validate().size() == 2);
  CHECK_THROWS_AS(eval_char(atom("pi*mu"), SatakePoint{}), EvaluationError);
  CHECK_THROWS_AS(eval_char(atom("opaque:pi_chi"), SatakePoint{}), EvaluationError);
}

TEST_CASE("atom text round trips") {
  for (auto text : {"Sym3(pi)*w^-1*mu^2", "pi", "w^2", "opaque:pi_chi*w", "1", "Sym2(pi)*w*eta"}) {
    const auto a = atom(text);
    CHECK(atom(format_atom(a)) == a);
  }
  CHECK(atom("pi") == Atom::sym_pow(1));
  CHECK(atom("Sym1(pi)") == Atom::sym_pow(1));
  CHECK(atom("1") == Atom::character(0));
  CHECK(atom("w^2") == Atom::character(2));
  CHECK(atom("mu^4") == atom("mu"));
  CHECK(render_atom(atom("Sym3(pi)*w^2")) == "Sym3⊗w^2");
  CHECK(render_atom(atom("pi*mu")) == "pi⊗mu");
  CHECK(render_atom(Atom::character(0)) == "1");
  CHECK(render(tensor_power(3)) == "Sym3 ⊕ 2·(pi⊗w)");

  for (auto bad : {"", "Sym(pi)", "Sym3(rho)", "nu", "w^x", "opaque:nope", "pi*"}) {
    CHECK_THROWS_AS(atom(bad), ParseError);
  }
}

TEST_CASE("virtual reps round trip through JSON") {
  for (int k = 1; k <= 4; ++k) {
    const auto rep = tensor_power(k);
    CHECK(virtual_rep_from_json(to_json(rep), kSymbols) == rep);
  }
  const auto doc = to_json(tensor_power(2));
  REQUIRE(doc.is_array());
  CHECK(doc[0]["atom"] == "Sym2(pi)");
  CHECK(doc[0]["mult"] == 1);
  CHECK_THROWS_AS(virtual_rep_from_json(nlohmann::json::object(), kSymbols), ParseError);
}

TEST_CASE("symbol table guards reserved names") {
  SymbolTable s;
  CHECK_THROWS_AS(s.declare_aux("pi", 2), InvalidArgument);
  CHECK_THROWS_AS(s.declare_aux("w", 2), InvalidArgument);
  s.declare_aux("nu", 5);
  CHECK(s.aux_order("nu") == 5);
  CHECK_FALSE(s.aux_order("mu").has_value());
}
