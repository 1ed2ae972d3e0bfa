#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <algorithm>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "setopt/io.hpp"
#include "setopt/papersuite.hpp"
#include "setopt/relations.hpp"
#include "setopt/scalarize.hpp"
#include "setopt/usop.hpp"

using namespace setopt;
using io::json;

namespace {

struct Global {
  std::string report = "table";
  int density = 16;
  std::uint64_t seed = 7;
};

void emit(const Global& g, const json& body, const std::string& table) {
  if (g.report == "json") {
    std::cout << body.dump(2) << "\n";
  } else {
    std::cout << table;
  }
}

std::string field_line(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

// ---- scalarize -------------------------------------------------------------------

struct ScalarizeArgs {
  std::string fn = "z";
  std::string cone;
  std::string e;
  std::string y;
  std::string left;
  std::string right;
};

VSet need_set(const std::string& path, const char* flag) {
  if (path.empty()) throw SchemaError("MissingArgument", std::string(flag) + " is required for this functional");
  return io::set_from_json(io::load_file(path));
}

int run_scalarize(const Global& g, const ScalarizeArgs& a) {
  const PolyhedralCone k = io::cone_from_json(io::load_file(a.cone));
  const Vector e = Vector::parse(a.e);
  json body{{"command", "scalarize"}, {"fn", a.fn}, {"e", io::to_json(e)}};
  std::string table = field_line("fn", a.fn) + field_line("e", to_string(e));
  if (a.fn == "z") {
    if (a.y.empty()) throw SchemaError("MissingArgument", "--y is required for z");
    const Vector y = Vector::parse(a.y);
    const ExtReal v = z_value(k, e, y);
    body["y"] = io::to_json(y);
    body["value"] = io::to_json(v);
    table += field_line("y", to_string(y)) + field_line("value", v.str());
    emit(g, body, table);
    return 0;
  }
  ScalarizationReport r;
  if (a.fn == "Z1" || a.fn == "Z2" || a.fn == "G") {
    const VSet p = need_set(a.left, "--left");
    const VSet q = need_set(a.right, "--right");
    if (a.fn == "Z1") r = z1_pair(k, e, p, q);
    if (a.fn == "Z2") r = z2_pair(k, e, p, q);
    if (a.fn == "G") r = g_e(e, k, p, q);
  } else if (a.fn == "SZ1" || a.fn == "SZ2") {
    const VSet p = need_set(a.left, "--left");
    r = a.fn == "SZ1" ? script_z1(k, e, p) : script_z2(k, e, p);
  } else {
    throw SchemaError("UnknownFunctional", "--fn must be one of z, Z1, Z2, SZ1, SZ2, G");
  }
  body["report"] = io::to_json(r);
  table += field_line("value", r.value.str()) + field_line("exactness", to_string(r.exactness));
  if (r.attained_outer) table += field_line("attained (outer)", to_string(*r.attained_outer));
  if (r.attained_inner) table += field_line("attained (inner)", to_string(*r.attained_inner));
  if (r.inner_ray) table += field_line("inner LP ray", to_string(*r.inner_ray));
  if (r.outer_ray) table += field_line("outer ray", to_string(*r.outer_ray));
  emit(g, body, table);
  return 0;
}

// ---- check-relation ------------------------------------------------------------

struct RelationArgs {
  std::string relation = "l";
  std::string cone;
  std::string left;
  std::string right;
};

int run_relation(const Global& g, const RelationArgs& a) {
  const usop::Relation rel = usop::parse_relation(a.relation);
  const SetFamily f = io::family_from_json(io::load_file(a.left));
  const SetFamily h = io::family_from_json(io::load_file(a.right));
  const PolyhedralCone k = a.cone.empty() ? cone_orthant(f.dim()) : io::cone_from_json(io::load_file(a.cone));
  const bool single = f.size() == 1 && h.size() == 1;
  RelationVerdict v;
  switch (rel) {
    case usop::Relation::l:
      v = single ? leq_l(k, f[0].set, h[0].set) : union_leq_l(k, f, h, g.density);
      break;
    case usop::Relation::u:
      v = single ? leq_u(k, f[0].set, h[0].set) : union_leq_u(k, f, h, g.density);
      break;
    case usop::Relation::s:
      v = single ? leq_s(k, f[0].set, h[0].set) : union_leq_s(k, f, h, g.density);
      break;
    case usop::Relation::L:
      v = leq_L(k, f, h);
      break;
    case usop::Relation::U:
      v = leq_U(k, f, h);
      break;
    case usop::Relation::S:
      v = leq_S(k, f, h);
      break;
  }
  json body{{"command", "check-relation"}, {"relation", a.relation}, {"verdict", io::to_json(v)}};
  std::string table = field_line("relation", a.relation) + field_line("holds", v.holds ? "true" : "false") +
                      field_line("exactness", to_string(v.exactness));
  if (v.witness.left_label) table += field_line("left member", *v.witness.left_label);
  if (v.witness.right_label) table += field_line("right member", *v.witness.right_label);
  if (v.witness.point) table += field_line("witness point", to_string(*v.witness.point));
  for (const auto& [from, to] : v.witness.assignment) table += field_line("  assign " + from, to);
  if (!v.note.empty()) table += field_line("note", v.note);
  emit(g, body, table);
  return 0;
}

// ---- solve-usop ----------------------------------------------------------------

struct UsopArgs {
  std::string file;
  std::string kind = "L";
  std::string variant = "strict";
  bool verify = false;
};

int run_usop(const Global& g, const UsopArgs& a) {
  const usop::Instance inst = io::instance_from_json(io::load_file(a.file));
  const usop::RobustKind kind{usop::parse_relation(a.kind), usop::parse_variant(a.variant)};
  const auto feas = usop::robust_feasible_set(inst);
  json body{{"command", "solve-usop"}, {"kind", a.kind}, {"variant", usop::to_string(kind.variant)}};
  std::ostringstream table;
  table << "decision  feasibility  feasible  robust  witness\n";
  json robust = json::array();
  json rows = json::array();
  bool consistent = true;
  for (const auto& x : inst.decisions()) {
    const auto fv = usop::feasibility_vector(inst, x);
    const bool in_s = std::find(feas.begin(), feas.end(), x) != feas.end();
    json row{{"decision", x}, {"feasibility", io::to_json(fv)}, {"feasible", in_s}};
    std::string rob = "-";
    std::string wit = "-";
    if (in_s) {
      usop::RobustVerdict v = usop::is_robust(inst, x, kind);
      row["robust"] = io::to_json(v);
      rob = v.robust ? "yes" : "no";
      if (v.witness) wit = *v.witness;
      if (v.robust) robust.push_back(x);
      if (a.verify) {
        json th = json::array();
        for (usop::Relation t : {usop::Relation::L, usop::Relation::U, usop::Relation::S}) {
          usop::CharacterizationCheck c = usop::verify_characterization(inst, x, t);
          consistent = consistent && c.consistent;
          th.push_back({{"target", usop::to_string(t)},
                        {"which", c.which},
                        {"robust", c.robust.robust},
                        {"r_hat_meets_C", c.r_hat.meets},
                        {"consistent", c.consistent}});
        }
        for (int which : {1, 3}) {
          usop::SufficiencyCheck s = usop::verify_sufficiency(inst, x, which);
          th.push_back({{"sufficiency", which}, {"premise", s.premise}, {"robust", s.robust.robust}});
        }
        row["theorems"] = th;
      }
    }
    std::string fs;
    for (const auto& v : fv) fs += (fs.empty() ? "" : ",") + v.str();
    table << x << "  " << fs << "  " << (in_s ? "yes" : "no") << "  " << rob << "  " << wit << "\n";
    rows.push_back(row);
  }
  body["decisions"] = rows;
  body["robust_feasible_set"] = feas;
  body["robust_solutions"] = robust;
  if (a.verify) {
    body["theorems_consistent"] = consistent;
    table << "characterization theorems: " << (consistent ? "consistent" : "INCONSISTENT") << "\n";
  }
  emit(g, body, table.str());
  return consistent ? 0 : 1;
}

// ---- verify --------------------------------------------------------------------

int run_verify(const Global& g, bool paper, bool derived) {
  if (!paper && !derived) throw SchemaError("MissingArgument", "verify needs --paper-suite and/or --derived");
  papersuite::Options opt{g.density, g.seed};
  std::vector<papersuite::SuiteReport> reports;
  if (paper) reports.push_back(papersuite::run_all(opt));
  if (derived) reports.push_back(papersuite::derived_suite(opt));
  json body = json::array();
  std::string table;
  bool ok = true;
  for (const auto& r : reports) {
    body.push_back(papersuite::to_json(r));
    table += papersuite::to_table(r);
    ok = ok && r.pass();
  }
  emit(g, body.size() == 1 ? body[0] : body, table);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact set-order relations, scalarizations and robust set optimization"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--report", g.report, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--density", g.density, "Grid density of sampling paths")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed of randomized suites");

  ScalarizeArgs sa;
  auto* sc = app.add_subcommand("scalarize", "Evaluate z, Z1, Z2, SZ1, SZ2 or G");
  sc->add_option("--fn", sa.fn, "Functional");
  sc->add_option("--cone", sa.cone, "Cone JSON file")->required();
  sc->add_option("--e", sa.e, "Direction, e.g. \"1,1\"")->required();
  sc->add_option("--y", sa.y, "Point for z");
  sc->add_option("--left", sa.left, "Set JSON file");
  sc->add_option("--right", sa.right, "Set JSON file");

  RelationArgs ra;
  auto* rc = app.add_subcommand("check-relation", "Decide l, u, s, L, U or S");
  rc->add_option("--relation", ra.relation, "Relation");
  rc->add_option("--cone", ra.cone, "Cone JSON file (default: nonnegative orthant)");
  rc->add_option("--left", ra.left, "Set or family JSON file")->required();
  rc->add_option("--right", ra.right, "Set or family JSON file")->required();

  UsopArgs ua;
  auto* uc = app.add_subcommand("solve-usop", "Robust feasible set and robust solutions");
  uc->add_option("file", ua.file, "Instance JSON file")->required();
  uc->add_option("--kind", ua.kind, "Relation l, u, s, L, U or S");
  uc->add_option("--variant", ua.variant, "strict, minimal or minimal-mixed");
  uc->add_flag("--verify-theorems", ua.verify, "Cross-check the characterization theorems");

  bool paper = false;
  bool derived = false;
  auto* vc = app.add_subcommand("verify", "Run the reproduction suites");
  vc->add_flag("--paper-suite", paper, "Worked examples and counterexamples");
  vc->add_flag("--derived", derived, "Oracle closure of derived values");

  for (auto* s : {sc, rc, uc, vc}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc->parsed()) return run_scalarize(g, sa);
    if (rc->parsed()) return run_relation(g, ra);
    if (uc->parsed()) return run_usop(g, ua);
    return run_verify(g, paper, derived);
  } catch (const SchemaError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 4;
  }
}
