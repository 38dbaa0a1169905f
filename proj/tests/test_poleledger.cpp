#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hecke/error.hpp"
#include "hecke/poleledger.hpp"

using namespace hecke;
using namespace hecke::poles;
using repring::Atom;
using repring::VirtualRep;

namespace {

const auto kGeneral = TypeAssumption::self_dual_of(RepType::GeneralNonSolvable);
const auto kTetra = TypeAssumption::self_dual_of(RepType::Tetrahedral);
const auto kOcta = TypeAssumption::self_dual_of(RepType::Octahedral);

std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Multiplicity of the trivial representation in V^{(x)k}:
// (1/|G|) sum_g tr(g)^k over a binary polyhedral group given by
// (Satake angle, class size).
long long group_moment(const std::vector<std::pair<double, int>>& classes, int k) {
  double sum = 0.0;
  int order = 0;
  for (const auto& [theta, size] : classes) {
    sum += size * std::pow(2.0 * std::cos(theta), k);
    order += size;
  }
  return std::llround(sum / order);
}

// Moments of 2cos(theta) under (2/pi) sin^2 theta: Catalan numbers.
long long sato_tate_moment(int k) {
  if (k % 2 == 1) return 0;
  const int n = k / 2;
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

const double kPi = std::numbers::pi;
const std::vector<std::pair<double, int>> kBinaryTetrahedral{
    {0.0, 1}, {kPi, 1}, {kPi / 2, 6}, {kPi / 3, 8}, {2 * kPi / 3, 8}};
const std::vector<std::pair<double, int>> kBinaryOctahedral{
    {0.0, 1},     {kPi, 1},         {kPi / 2, 18},    {kPi / 3, 8},
    {2 * kPi / 3, 8}, {kPi / 4, 6}, {3 * kPi / 4, 6}};

}  // namespace

TEST_CASE("pole table for self-dual pi") {
  const std::pair<int, long long> general[] = {{2, 1}, {3, 0}, {4, 2}, {5, 0}, {6, 5}, {7, 0}, {8, 14}};
  for (const auto& [k, order] : general) {
    CAPTURE(k);
    CHECK(tensor_power_pole(k, kGeneral).total_order == order);
  }
  CHECK(tensor_power_pole(6, kTetra).total_order == 6);
  CHECK(tensor_power_pole(7, kTetra).total_order == 0);
  CHECK(tensor_power_pole(7, kOcta).total_order == 0);
}

TEST_CASE("pole orders equal invariant counts of the monodromy group") {
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(tensor_power_pole(k, kGeneral).total_order == sato_tate_moment(k));
    CHECK(tensor_power_pole(k, kTetra).total_order == group_moment(kBinaryTetrahedral, k));
    CHECK(tensor_power_pole(k, kOcta).total_order == group_moment(kBinaryOctahedral, k));
  }
  CHECK(group_moment(kBinaryOctahedral, 8) == 15);
  CHECK(group_moment(kBinaryTetrahedral, 8) == 22);
}

TEST_CASE("non-self-dual pi") {
  const auto nsd = TypeAssumption::non_self_dual_of(RepType::GeneralNonSolvable);
  CHECK(tensor_power_pole(2, nsd).total_order == 0);
  CHECK(tensor_power_pole(3, nsd).total_order == 0);
  // L(pi x pi^vee) always has a simple pole.
  const VirtualRep pi{Atom::sym_pow(1)};
  VirtualRep pi_dual;
  pi_dual.add(repring::dual(Atom::sym_pow(1)), 1);
  CHECK(rs_pole_order(pi, pi_dual, nsd).total_order == 1);
  // Torsion central character of order 2: w^2 is trivial, w is not.
  const TypeAssumption quadratic{RepType::GeneralNonSolvable, false, 2};
  CHECK(std_pole_order(VirtualRep(Atom::character(2)), quadratic).total_order == 1);
  CHECK(std_pole_order(VirtualRep(Atom::character(1)), quadratic).total_order == 0);
}

TEST_CASE("certificate families match the displayed factorizations") {
  CHECK(family_multiplicities(tensor_power_pole(3, kGeneral)) == std::vector<long long>{1, 2});
  CHECK(family_multiplicities(tensor_power_pole(4, kGeneral)) == std::vector<long long>{1, 3, 2});
  CHECK(family_multiplicities(tensor_power_pole(6, kGeneral)) == std::vector<long long>{1, 4, 4});
  CHECK(family_multiplicities(tensor_power_pole(7, kGeneral)) ==
        std::vector<long long>{1, 2, 3, 2, 6, 4});
  CHECK(sorted(family_multiplicities(tensor_power_pole(8, kGeneral))) ==
        sorted({1, 6, 9, 4, 12, 4}));
  CHECK(family_multiplicities(tensor_power_pole(3, TypeAssumption::non_self_dual_of(
                                                       RepType::GeneralNonSolvable))) ==
        std::vector<long long>{1, 2});
}

TEST_CASE("rendered certificates") {
  CHECK(certificate_render(tensor_power_pole(2, kGeneral)) == "L(pi × pi)");
  CHECK(certificate_render(tensor_power_pole(3, kGeneral)) == "L(Sym3) · L(pi⊗w)^2");
  CHECK(certificate_render(tensor_power_pole(4, kGeneral)) == "L(Sym4) · L(Sym2⊗w)^3 · L(w^2)^2");
  CHECK(certificate_render(tensor_power_pole(6, kGeneral)) ==
        "L(Sym3 × Sym3) · L(Sym3 × pi⊗w)^4 · L(pi⊗w × pi⊗w)^4");
  const auto k7 = certificate_render(tensor_power_pole(7, kGeneral));
  CHECK(k7.find("L(Sym3⊗w^2)^2") != std::string::npos);
  CHECK(k7.starts_with("L(Sym4 × Sym3) · L(Sym4 × pi⊗w)^2 · L(Sym3 × Sym2⊗w)^3"));
}

TEST_CASE("tetrahedral k=6 certificate picks up the extra pole from mu-twists") {
  const auto cert = tensor_power_pole(6, kTetra);
  long long from_mu_pair = 0;
  for (const auto& f : cert.factors) {
    if (f.right && f.left.aux_exponent("mu") + f.right->aux_exponent("mu") == 3) {
      from_mu_pair += f.multiplicity * f.pole_contrib;
    }
  }
  CHECK(from_mu_pair == 2);
  CHECK(cert.notes.empty());
}

TEST_CASE("factor multiplicities add up to the dimension count") {
  for (int k = 2; k <= 8; ++k) {
    for (const auto& t : {kGeneral, kTetra, kOcta}) {
      const auto cert = tensor_power_pole(k, t);
      long long dims = 0;
      for (const auto& f : cert.factors) {
        dims += f.multiplicity * f.left.dim() * (f.right ? f.right->dim() : 1);
      }
      CHECK(dims == (1LL << k));
      long long total = 0;
      for (const auto& f : cert.factors) total += f.multiplicity * f.pole_contrib;
      CHECK(total == cert.total_order);
    }
  }
}

TEST_CASE("Rankin-Selberg and standard routes agree for k = 3, 4") {
  for (const auto& t : {kGeneral, kTetra, kOcta}) {
    CHECK(rs_pole_order(repring::tensor_power(2), repring::tensor_power(1), t).total_order ==
          tensor_power_pole(3, t).total_order);
    CHECK(rs_pole_order(repring::tensor_power(2), repring::tensor_power(2), t).total_order ==
          tensor_power_pole(4, t).total_order);
    CHECK(std_pole_order(repring::tensor_power(2), t).total_order ==
          tensor_power_pole(2, t).total_order);
  }
}

TEST_CASE("derived cases are flagged") {
  CHECK(tensor_power_pole(8, kGeneral).notes.empty());
  CHECK(tensor_power_pole(6, kGeneral).notes.empty());
  CHECK_FALSE(tensor_power_pole(6, kOcta).notes.empty());
  CHECK_FALSE(tensor_power_pole(8, kTetra).notes.empty());
  CHECK_FALSE(tensor_power_pole(5, kGeneral).notes.empty());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(tensor_power_pole(6, TypeAssumption::self_dual_of(RepType::Dihedral)),
                  MonomialExcludedError);
  CHECK_THROWS_AS(tensor_power_pole(1, kGeneral), InvalidArgument);
  CHECK_THROWS_AS(tensor_power_pole(9, kGeneral), InvalidArgument);
  // Sym^5 has no cuspidality result to lean on.
  CHECK_THROWS_AS(std_pole_order(VirtualRep(Atom::sym_pow(5)), kGeneral), UnsupportedError);
  // Inconsistent bundle: non-dihedral self-dual pi has trivial w.
  CHECK_THROWS_AS(tensor_power_pole(2, TypeAssumption{RepType::GeneralNonSolvable, true, 3}),
                  InvalidArgument);
}

TEST_CASE("JSON certificate") {
  const auto doc = certificate_json(tensor_power_pole(8, kGeneral));
  CHECK(doc["total"] == 14);
  CHECK(doc["assumption"]["type"] == "general");
  CHECK(doc["assumption"]["self_dual"] == true);
  REQUIRE(doc["factors"].is_array());
  long long total = 0;
  for (const auto& f : doc["factors"]) {
    CHECK(f.contains("left"));
    CHECK(f.contains("right"));
    total += f["mult"].get<long long>() * f["pole"].get<int>();
  }
  CHECK(total == 14);
  // Canonical order does not depend on presentation order.
  CHECK(certificate_json(tensor_power_pole(8, kGeneral)) == doc);
}
