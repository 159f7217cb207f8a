#include <chrono>
#include <fstream>
#include <iostream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalog.hpp"
#include "ydlcat/errors.hpp"
#include "ydlcat/grpalg.hpp"
#include "ydlcat/involution.hpp"
#include "ydlcat/io.hpp"
#include "ydlcat/tcat.hpp"

namespace {

using namespace ydlcat;
using json = nlohmann::ordered_json;

enum ExitCode { kPass = 0, kCheckFailed = 1, kParseError = 2, kSemanticError = 3 };

struct Outcome {
  std::string command;
  std::vector<std::string> inputs;
  std::string field;
  std::vector<std::pair<std::string, std::string>> facts;
  ValidationReport report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A module file, or a graded file converted through to_generic.
struct LoadedModule {
  YdlModule module;
  std::optional<GradedBimodule> graded;
};

LoadedModule load_module(const std::string& path) {
  const std::string text = read_file(path);
  const std::string kind = file_kind(text);
  if (kind == "module") return {parse_module(text), std::nullopt};
  if (kind == "graded") {
    GradedBimodule g = parse_graded(text);
    return {to_generic(g), g};
  }
  throw Error(path + " holds a " + kind + ", not a module");
}

void print_text(const Outcome& o, double ms) {
  std::cout << "ydlcat " << o.command;
  for (const auto& i : o.inputs) std::cout << ' ' << i;
  std::cout << "\nfield " << o.field << '\n';
  for (const auto& [k, v] : o.facts) std::cout << k << ' ' << v << '\n';
  std::cout << o.report.to_text();
  const auto failures = o.report.failures();
  std::cout << "result " << (failures.empty() ? "PASS" : "FAIL") << " ("
            << o.report.results().size() << " checks, " << failures.size() << " failed) in "
            << static_cast<long long>(ms) << " ms\n";
}

void print_json(const Outcome& o, double ms) {
  json j;
  j["command"] = o.command;
  j["inputs"] = o.inputs;
  j["field"] = o.field;
  json facts = json::object();
  for (const auto& [k, v] : o.facts) facts[k] = v;
  j["facts"] = facts;
  json results = json::array();
  for (const auto& r : o.report.results()) {
    json e;
    e["name"] = r.name;
    e["passed"] = r.passed;
    e["informational"] = r.informational;
    if (!r.note.empty()) e["note"] = r.note;
    if (r.witness) {
      e["witness"] = {{"input", r.witness->input},
                      {"output", r.witness->output},
                      {"lhs", r.witness->lhs},
                      {"rhs", r.witness->rhs}};
    }
    results.push_back(e);
  }
  j["results"] = results;
  j["passed"] = o.report.all_passed();
  j["elapsed_ms"] = static_cast<long long>(ms);
  std::cout << j.dump(2) << '\n';
}

int report_error(bool as_json, const char* kind, const std::string& what, int code) {
  if (as_json) {
    std::cout << json{{"error", kind}, {"message", what}}.dump(2) << '\n';
  } else {
    std::cerr << "ydlcat: " << kind << " error: " << what << '\n';
  }
  return code;
}

// Keeps only entries whose name passes the filter.
ValidationReport filtered(const ValidationReport& rep, const std::function<bool(const std::string&)>& keep) {
  ValidationReport out;
  for (const auto& r : rep.results())
    if (keep(r.name)) out.add(r);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Yetter-Drinfeld-Long bimodules and their braided category"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report on stdout");

  std::string kind, path, path2, hexagons, phi, side = "left", quadruple, demo, output;
  bool inverse = false;
  unsigned prime = 0, seed = 1;

  auto* check = app.add_subcommand("check", "validate a Hopf algebra, module or graded module");
  check->add_option("kind", kind, "hopf | module | graded")
      ->required()
      ->check(CLI::IsMember({"hopf", "module", "graded"}));
  check->add_option("file", path, "input file")->required();

  auto* braid = app.add_subcommand("braid", "build c_{M,N} and check it");
  braid->add_option("m", path, "first module")->required();
  braid->add_option("n", path2, "second module")->required();
  braid->add_option("--hexagons", hexagons, "third module for both hexagon identities");
  braid->add_option("--phi", phi, "module whose component conjugates M and N");
  braid->add_flag("--inverse", inverse, "check the explicit inverse");

  auto* dual = app.add_subcommand("dual", "build a dual with ev/coev and check it");
  dual->add_option("m", path, "module")->required();
  dual->add_option("--side", side, "left | right")->check(CLI::IsMember({"left", "right"}));

  auto* iso = app.add_subcommand("iso", "move a module to the unit component and back");
  iso->add_option("m", path, "module")->required();
  iso->add_option("--quadruple", quadruple, "quadruple in involution")->required();

  auto* demo_cmd = app.add_subcommand("demo", "write a catalog object");
  demo_cmd->add_option("name", demo, "one of: " + [] {
    std::string s;
    for (const auto& n : cli::demo_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();
  demo_cmd->add_option("-o,--output", output, "output file (default: stdout)");
  demo_cmd->add_option("--prime", prime, "work over F_p instead of the rationals");
  demo_cmd->add_option("--seed", seed, "seed for randomized catalog objects");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (*demo_cmd) {
      FieldCtx f = prime ? FieldCtx::prime(prime) : FieldCtx::rational();
      std::string text = cli::demo_text(demo, f, seed);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw Error("cannot write " + output);
        out << text;
      }
      return kPass;
    }

    if (*check) {
      o.command = "check " + kind;
      o.inputs = {path};
      const std::string text = read_file(path);
      if (kind == "hopf") {
        HopfPtr h = parse_hopf(text);
        o.field = h->field().to_string();
        o.facts.push_back({"algebra", h->name() + " of dimension " + std::to_string(h->dim())});
        o.report = validate_hopf(*h);
      } else if (kind == "module") {
        YdlModule m = parse_module(text);
        o.field = m.field().to_string();
        o.facts.push_back({"component", to_string(m.component())});
        o.facts.push_back({"dim", std::to_string(m.dim())});
        o.report = check_module(m);
      } else {
        GradedBimodule g = parse_graded(text);
        o.field = g.field().to_string();
        o.facts.push_back({"components", std::to_string(g.pieces().size())});
        o.facts.push_back({"dim", std::to_string(g.dim())});
        o.report = validate_graded(g);
        o.report.merge(check_module(to_generic(g)), "generic.");
        o.report.merge(check_closed_form_indices(g, g));
      }
    } else if (*braid) {
      o.command = "braid";
      o.inputs = {path, path2};
      LoadedModule m = load_module(path), n = load_module(path2);
      o.field = m.module.field().to_string();
      BraidingMap c = braiding(m.module, n.module);
      o.facts.push_back({"source_component", to_string(c.source.component())});
      o.facts.push_back({"target_component", to_string(c.target.component())});
      const bool flip = c.map == flip_map(m.module.field(), m.module.dim(), n.module.dim()).matrix();
      o.facts.push_back({"braiding", flip ? "flip permutation" : "not a flip"});
      auto rep = check_braiding(c);
      o.report = filtered(rep, [&](const std::string& name) {
        const bool about_inverse = name.rfind("inverse", 0) == 0 || name.rfind("braiding_after", 0) == 0;
        return inverse || !about_inverse;
      });
      if (m.graded && n.graded) {
        GradedBraiding gb = graded_braiding(*m.graded, *n.graded);
        o.report.add_flag("graded_matches_generic",
                          gb.to_matrix() == c.map &&
                              to_generic(gb.target, m.module.h1(), m.module.h2()) == c.target);
      }
      if (!hexagons.empty()) {
        o.inputs.push_back(hexagons);
        o.report.merge(check_hexagons(m.module, n.module, load_module(hexagons).module));
      }
      if (!phi.empty()) {
        o.inputs.push_back(phi);
        o.report.merge(check_phi_compat(load_module(phi).module, m.module, n.module));
      }
    } else if (*dual) {
      o.command = "dual --side " + side;
      o.inputs = {path};
      LoadedModule m = load_module(path);
      o.field = m.module.field().to_string();
      DualityData d = side == "left" ? left_dual(m.module) : right_dual(m.module);
      o.facts.push_back({"dual_component", to_string(d.dual.component())});
      o.report = check_duality(m.module, d);
    } else if (*iso) {
      o.command = "iso";
      o.inputs = {path, quadruple};
      LoadedModule m = load_module(path);
      o.field = m.module.field().to_string();
      InvolutionQuadruple q = parse_quadruple(read_file(quadruple));
      o.facts.push_back({"component", to_string(m.module.component())});
      o.report = check_involution_quadruple(q, m.module.component());
      if (o.report.all_passed()) o.report.merge(check_iso_pair(m.module, q));
    }
  } catch (const ParseError& e) {
    return report_error(as_json, "parse", e.what(), kParseError);
  } catch (const Error& e) {
    return report_error(as_json, "semantic", e.what(), kSemanticError);
  }

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (as_json) {
    print_json(o, ms);
  } else {
    print_text(o, ms);
  }
  return o.report.all_passed() ? kPass : kCheckFailed;
}
