#include "hecke/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hecke/boundengine.hpp"
#include "hecke/datasource.hpp"
#include "hecke/dirichletlab.hpp"
#include "hecke/error.hpp"
#include "hecke/kernels.hpp"
#include "hecke/poleledger.hpp"
#include "hecke/repring.hpp"

namespace hecke::cli {
namespace {

using nlohmann::json;

std::string num(double v, int precision = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

// Code points, so UTF-8 symbols like ⊗ count as one column.
std::size_t display_width(const std::string& text) {
  return static_cast<std::size_t>(
      std::count_if(text.begin(), text.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

// Options shared by decompose and poles.
struct AssumptionFlags {
  std::string type = "general";
  bool self_dual = true;
  int omega_order = -1;

  void attach(CLI::App* app) {
    app->add_option("--type", type, "general | tetrahedral | octahedral | dihedral")
        ->check(CLI::IsMember({"general", "tetrahedral", "octahedral", "dihedral"}))
        ->capture_default_str();
    app->add_option("--self-dual", self_dual, "true | false")->capture_default_str();
    app->add_option("--omega-order", omega_order,
                    "order of the central character (0 = non-torsion); "
                    "defaults to 1 when self-dual, else 0")
        ->check(CLI::NonNegativeNumber);
  }

  TypeAssumption resolve() const {
    TypeAssumption t;
    t.rep_type = parse_rep_type(type);
    t.self_dual = self_dual;
    t.omega_order = omega_order >= 0 ? omega_order : (self_dual ? 1 : 0);
    t.validate();
    return t;
  }
};

struct DecomposeCmd {
  int k = 0;
  std::vector<std::string> atoms;
  bool reduce = false;
  bool as_json = false;
  AssumptionFlags assumption;

  int run(std::ostream& out) const {
    using namespace repring;
    const auto symbols = SymbolTable::standard();
    VirtualRep rep;
    std::string label;
    if (k > 0) {
      rep = tensor_power(k);
      label = "pi^(x)" + std::to_string(k);
    } else {
      rep = VirtualRep(parse_atom(atoms.front(), symbols));
      label = atoms.front();
      for (std::size_t i = 1; i < atoms.size(); ++i) {
        rep = tensor(rep, VirtualRep(parse_atom(atoms[i], symbols)));
        label += " (x) " + atoms[i];
      }
    }
    std::string note;
    if (reduce) {
      const auto t = assumption.resolve();
      VirtualRep canonical_rep;
      const VirtualRep reduced = repring::reduce(rep, t);
      for (const auto& [atom, m] : reduced.terms()) {
        canonical_rep.add(canonical(atom, t), m);
      }
      rep = canonical_rep;
      note = describe(t);
    }
    if (as_json) {
      json doc{{"input", label}, {"rep", to_json(rep)}, {"dim", rep.dim()}, {"render", render(rep)}};
      if (reduce) doc["assumption"] = note;
      out << doc.dump(2) << '\n';
      return 0;
    }
    out << label << " = " << render(rep) << '\n';
    out << "dim " << rep.dim() << '\n';
    if (reduce) out << "reduced under: " << note << '\n';
    return 0;
  }
};

struct PolesCmd {
  int k = 0;
  bool as_json = false;
  AssumptionFlags assumption;

  int run(std::ostream& out) const {
    const auto cert = poles::tensor_power_pole(k, assumption.resolve());
    if (as_json) {
      auto doc = poles::certificate_json(cert);
      doc["k"] = k;
      out << doc.dump(2) << '\n';
      return 0;
    }
    out << "L(pi^(x)" << k << ") = " << poles::certificate_render(cert) << '\n';
    std::size_t width = 0;
    for (const auto& f : cert.factors) width = std::max(width, display_width(poles::render_factor(f)));
    for (const auto& f : cert.factors) {
      const auto name = poles::render_factor(f);
      out << "  " << name << std::string(width - display_width(name) + 2, ' ') << "mult " << f.multiplicity
          << "  pole " << f.pole_contrib << '\n';
    }
    out << "assumption: " << describe(cert.assumption) << '\n';
    out << "total: " << cert.total_order << '\n';
    for (const auto& n : cert.notes) out << "note: " << n << '\n';
    return 0;
  }
};

struct BoundsCmd {
  std::string side = "pos";
  int pole4 = 2;
  int pole8 = 14;
  int pole6 = 5;
  double phi = 0.0;
  std::string ref;
  bool as_json = false;

  int run(std::ostream& out) const {
    if (side == "ref") return run_ref(out);
    bounds::BoundResult r;
    if (side == "pos") {
      r = bounds::positive_side(pole4, pole8);
    } else if (side == "neg") {
      r = bounds::negative_side(pole6);
    } else if (side == "weak") {
      r = bounds::positive_side_weak();
    } else {
      r = bounds::non_self_dual(phi);
    }
    const std::string truncated = bounds::truncate_decimal(r.constant, 3);
    if (as_json) {
      json doc{{"side", side},
               {"constant", r.constant},
               {"truncated", truncated},
               {"branch_values", {r.branch_values.first, r.branch_values.second}},
               {"trace", r.trace}};
      doc["optimizer"] = r.optimizer ? json(*r.optimizer) : json(nullptr);
      out << doc.dump(2) << '\n';
      return 0;
    }
    out << "constant: " << num(r.constant) << " (" << truncated << "...)\n";
    if (side == "pos" && r.optimizer) {
      out << "d*: " << num(*r.optimizer) << " (" << bounds::truncate_decimal(*r.optimizer, 3)
          << "...)\n";
    } else if (r.optimizer) {
      out << "worst case: dA = dB = " << num(*r.optimizer) << '\n';
    }
    out << "branches: " << num(r.branch_values.first) << ", " << num(r.branch_values.second) << '\n';
    for (const auto& line : r.trace) out << "  " << line << '\n';
    return 0;
  }

  int run_ref(std::ostream& out) const {
    json doc = json::object();
    if (!ref.empty()) {
      const auto value = bounds::lookup_reference(ref);
      if (!value) throw InvalidArgument("unknown reference constant '" + ref + "'");
      doc[ref] = *value;
    } else {
      for (const auto& [name, value] : bounds::reference_constants()) doc[name] = value;
    }
    if (as_json) {
      out << doc.dump(2) << '\n';
      return 0;
    }
    for (const auto& [name, value] : doc.items()) {
      out << name << ": " << num(value.get<double>()) << '\n';
    }
    return 0;
  }
};

struct GenerateCmd {
  std::string kind;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> ainvs;
  std::uint64_t x = 0;
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  std::string output;
  bool as_json = false;

  int run(std::ostream& out) const {
    data::Dataset d;
    if (kind == "ec") {
      if (x == 0) throw InvalidArgument("--kind ec needs --x");
      data::ShortWeierstrass curve{a, b};
      if (!ainvs.empty()) {
        if (ainvs.size() != 5) throw InvalidArgument("--ainvs takes a1,a2,a3,a4,a6");
        curve = data::from_long_weierstrass(ainvs[0], ainvs[1], ainvs[2], ainvs[3], ainvs[4]);
      }
      d = data::ec_ap(curve.a, curve.b, x);
    } else if (kind == "tau") {
      if (x == 0) throw InvalidArgument("--kind tau needs --x");
      d = data::tau_ap(x);
    } else {
      d = data::sato_tate_sample(n, seed);
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output.empty()) {
      file.open(output);
      if (!file) throw InvalidArgument("cannot open '" + output + "' for writing");
      sink = &file;
    }
    if (as_json) {
      json records = json::array();
      for (const auto& r : d.records) {
        json row{{"p", r.p}, {"a_re", r.a.real()}, {"a_im", r.a.imag()}};
        if (r.raw) row["a_raw"] = *r.raw;
        records.push_back(std::move(row));
      }
      json doc{{"header",
                {{"source", d.header.source},
                 {"self_dual", d.header.self_dual},
                 {"normalization", d.header.normalization},
                 {"X", d.header.X},
                 {"omega_trivial", d.header.omega_trivial},
                 {"bad_primes", d.header.bad_primes}}},
               {"records", records}};
      *sink << doc.dump(2) << '\n';
    } else {
      data::write_csv(*sink, d.header, d.records);
    }
    if (!output.empty()) {
      out << "wrote " << d.records.size() << " records to " << output << '\n';
    }
    return 0;
  }
};

struct VerifyCmd {
  std::string input;
  std::string theorem;
  double phi = 0.0;
  double eps = 0.01;
  bool as_json = false;

  int run(std::ostream& out) const {
    const auto d = data::read_csv(std::filesystem::path(input));
    const auto r = lab::verify_theorem(d, lab::parse_theorem(theorem), phi, eps);
    if (as_json) {
      auto doc = lab::to_json(r);
      doc["warnings"] = d.warnings;
      out << doc.dump(2) << '\n';
      return 0;
    }
    const char* relation = r.theorem == lab::Theorem::T1Neg ? "<" : ">";
    out << "theorem " << lab::to_string(r.theorem) << " on " << d.header.source << '\n';
    out << "qualifying: x_p " << relation << ' ' << num(r.threshold) << " (eps " << num(r.eps)
        << ", phi " << num(r.phi) << ")\n";
    out << "count: " << r.count << " of " << r.total << " (required " << r.required << ")\n";
    out << "witnesses:";
    for (const auto& [p, x] : r.witnesses) out << ' ' << p << ':' << num(x, 6);
    out << '\n';
    for (const auto& w : d.warnings) out << "warning: " << w << '\n';
    out << (r.pass ? "PASS" : "FAIL") << '\n';
    return 0;
  }
};

struct ProbeCmd {
  std::string input;
  int k = 2;
  std::vector<double> s_grid = lab::kDefaultSGrid;
  double threshold = -1.0;
  std::string side = "above";
  double phi = 0.0;
  bool as_json = false;

  int run(std::ostream& out) const {
    const auto d = data::read_csv(std::filesystem::path(input));
    const double slope = lab::pole_order_probe(d.records, k, s_grid);
    const double s0 = lab::operating_point(d.header.X);
    json rows = json::array();
    for (double s : s_grid) {
      rows.push_back({{"s", s},
                      {"sum", lab::truncated_sum(d.records, k, s, phi)},
                      {"ratio", lab::normalized_ratio(d.records, k, s, phi)}});
    }
    json doc{{"k", k},
             {"slope", slope},
             {"grid", rows},
             {"s_operating", s0},
             {"ratio_operating", lab::normalized_ratio(d.records, k, s0, phi)},
             {"kernel", kernels::to_string(kernels::active_kernels().isa)}};
    if (threshold >= 0.0) {
      doc["density"] = lab::to_json(
          lab::density_profile(d.records, threshold, lab::parse_side(side), phi, d.header.X));
    }
    if (as_json) {
      out << doc.dump(2) << '\n';
      return 0;
    }
    out << "k = " << k << ", " << d.records.size() << " primes, X = " << d.header.X << '\n';
    for (const auto& row : rows) {
      out << "  s = " << num(row["s"].get<double>(), 6) << "  sum = " << num(row["sum"].get<double>())
          << "  ratio = " << num(row["ratio"].get<double>()) << '\n';
    }
    out << "slope vs log(1/(s-1)): " << num(slope) << '\n';
    out << "ratio at s = 1 + 1/log X (" << num(s0, 6)
        << "): " << num(doc["ratio_operating"].get<double>()) << '\n';
    if (doc.contains("density")) {
      const auto& den = doc["density"];
      out << "density " << side << ' ' << num(threshold) << ": " << den["count"].get<std::size_t>()
          << " of " << den["total"].get<std::size_t>() << " (natural "
          << num(den["natural_proportion"].get<double>(), 6) << ", dirichlet-weighted "
          << num(den["dirichlet_weighted"].get<double>(), 6) << ")\n";
    }
    return 0;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pole orders, eigenvalue bounds and empirical checks for GL(2) Hecke eigenvalues",
               "heckebounds"};
  app.require_subcommand(1);

  DecomposeCmd decompose;
  auto* dec = app.add_subcommand("decompose", "Clebsch-Gordan decomposition of tensor powers");
  auto* dec_k = dec->add_option("--k", decompose.k, "tensor power of pi (1..4)");
  auto* dec_atoms = dec->add_option("--atom", decompose.atoms, "atom to tensor, e.g. Sym3(pi)*w");
  dec_k->excludes(dec_atoms);
  dec->add_flag("--reduce", decompose.reduce, "reduce under the type assumption");
  dec->add_flag("--json", decompose.as_json, "JSON output");
  decompose.assumption.attach(dec);

  PolesCmd poles_cmd;
  auto* pol = app.add_subcommand("poles", "pole order at s = 1 of L(pi^(x)k) with certificate");
  pol->add_option("--k", poles_cmd.k, "tensor power (2..8)")->required();
  pol->add_flag("--json", poles_cmd.as_json, "JSON output");
  poles_cmd.assumption.attach(pol);

  BoundsCmd bounds_cmd;
  auto* bnd = app.add_subcommand("bounds", "one-sided eigenvalue constants");
  bnd->add_option("--side", bounds_cmd.side, "pos | neg | nsd | weak | ref")
      ->check(CLI::IsMember({"pos", "neg", "nsd", "weak", "ref"}))
      ->capture_default_str();
  bnd->add_option("--pole4", bounds_cmd.pole4, "pole order of L(pi^(x)4)")->capture_default_str();
  bnd->add_option("--pole8", bounds_cmd.pole8, "pole order of L(pi^(x)8)")->capture_default_str();
  bnd->add_option("--pole6", bounds_cmd.pole6, "lower bound for the sixth-power sum")
      ->capture_default_str();
  bnd->add_option("--phi", bounds_cmd.phi, "rotation angle for --side nsd")->capture_default_str();
  bnd->add_option("--ref", bounds_cmd.ref, "reference constant name for --side ref");
  bnd->add_flag("--json", bounds_cmd.as_json, "JSON output");

  GenerateCmd gen_cmd;
  auto* gen = app.add_subcommand("generate", "write a normalized eigenvalue dataset as CSV");
  gen->add_option("--kind", gen_cmd.kind, "ec | tau | st")
      ->required()
      ->check(CLI::IsMember({"ec", "tau", "st"}));
  gen->add_option("--a", gen_cmd.a, "A in y^2 = x^3 + Ax + B");
  gen->add_option("--b", gen_cmd.b, "B in y^2 = x^3 + Ax + B");
  gen->add_option("--ainvs", gen_cmd.ainvs, "long Weierstrass a1,a2,a3,a4,a6")->delimiter(',');
  gen->add_option("--x", gen_cmd.x, "prime bound X");
  gen->add_option("--n", gen_cmd.n, "number of primes (st)")->capture_default_str();
  gen->add_option("--seed", gen_cmd.seed, "seed (st)")->capture_default_str();
  gen->add_option("--output,-o", gen_cmd.output, "output file (default stdout)");
  gen->add_flag("--json", gen_cmd.as_json, "JSON output instead of CSV");

  VerifyCmd ver_cmd;
  auto* ver = app.add_subcommand("verify", "count witnesses for a one-sided bound");
  ver->add_option("--input", ver_cmd.input, "dataset CSV")->required()->check(CLI::ExistingFile);
  ver->add_option("--theorem", ver_cmd.theorem, "t1pos | t1neg | t2")
      ->required()
      ->check(CLI::IsMember({"t1pos", "t1neg", "t2"}));
  ver->add_option("--phi", ver_cmd.phi, "rotation angle (t2)")->capture_default_str();
  ver->add_option("--eps", ver_cmd.eps, "slack below the constant")->capture_default_str();
  ver->add_flag("--json", ver_cmd.as_json, "JSON output");

  ProbeCmd probe_cmd;
  auto* prb = app.add_subcommand("probe", "empirical pole order of sum_p x_p^k / p^s");
  prb->add_option("--input", probe_cmd.input, "dataset CSV")->required()->check(CLI::ExistingFile);
  prb->add_option("--k", probe_cmd.k, "power")->capture_default_str();
  prb->add_option("--s-grid", probe_cmd.s_grid, "comma-separated s values > 1")
      ->delimiter(',')
      ->capture_default_str();
  prb->add_option("--threshold", probe_cmd.threshold, "also report the density beyond c");
  prb->add_option("--side", probe_cmd.side, "above | below")
      ->check(CLI::IsMember({"above", "below"}))
      ->capture_default_str();
  prb->add_option("--phi", probe_cmd.phi, "rotation angle")->capture_default_str();
  prb->add_flag("--json", probe_cmd.as_json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (dec->parsed() && decompose.k == 0 && decompose.atoms.empty()) {
      throw CLI::ValidationError("decompose", "needs --k or at least one --atom");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dec->parsed()) return decompose.run(out);
    if (pol->parsed()) return poles_cmd.run(out);
    if (bnd->parsed()) return bounds_cmd.run(out);
    if (gen->parsed()) return gen_cmd.run(out);
    if (ver->parsed()) return ver_cmd.run(out);
    if (prb->parsed()) return probe_cmd.run(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace hecke::cli
