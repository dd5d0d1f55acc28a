// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pjl/pjl.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string xi;
  std::string cutoff;
  int ext_budget = 48;
  uint64_t seed = 0;
  bool json = false;
};

struct CliError {
  std::string message;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PolyPtr = std::unique_ptr<pjl_poly, Deleter<pjl_poly, pjl_poly_free>>;
using ConfigPtr = std::unique_ptr<pjl_config, Deleter<pjl_config, pjl_config_free>>;
using TreePtr = std::unique_ptr<pjl_tree, Deleter<pjl_tree, pjl_tree_free>>;

void check(pjl_status s) {
  if (s != PJL_OK) throw CliError{std::string(pjl_status_name(s)) + ": " + pjl_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  pjl_string_free(s);
  return out;
}

PolyPtr parse(const std::string& text) {
  pjl_poly* p = nullptr;
  size_t offset = 0;
  pjl_status s = pjl_poly_parse(text.c_str(), &p, &offset);
  if (s == PJL_ERR_SYNTAX) {
    throw CliError{"Syntax: " + std::string(pjl_last_error()) + "\n  " + text + "\n  " + std::string(offset, ' ') + "^"};
  }
  check(s);
  return PolyPtr(p);
}

ConfigPtr config(const Common& c) {
  ConfigPtr cfg(pjl_config_new());
  if (!cfg) throw CliError{"out of memory"};
  if (!c.xi.empty()) check(pjl_config_set_xi(cfg.get(), c.xi.c_str()));
  if (!c.cutoff.empty()) check(pjl_config_set_cutoff(cfg.get(), c.cutoff.c_str()));
  check(pjl_config_set_ext_budget(cfg.get(), c.ext_budget));
  pjl_config_set_seed(cfg.get(), c.seed);
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{"cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string str(const Json& j) { return j.is_null() ? "-" : (j.is_string() ? j.get<std::string>() : j.dump()); }

void print_tree_summary(const Json& s) {
  std::cout << "xi = " << str(s["xi"]) << ", " << s["nodes"] << " nodes\n";
  for (const auto& l : s["labels"]) {
    std::cout << str(l["name"]) << " = " << str(l["poly"]) << ": " << l["roots"] << " roots, split formula "
              << str(l["split_formula"]) << "\n";
    for (const auto& n : l["split_nodes"])
      std::cout << "  split at delta " << str(n["delta"]) << ": lambda " << str(n["lambda"]) << ", e " << n["e"]
                << ", " << n["conj"] << " conjugate(s), form " << str(n["form"]) << "\n";
  }
}

int cmd_expand(const Common& c, const std::string& f, const std::string& from_json, const std::string& tree_out) {
  pjl_tree* raw = nullptr;
  if (!from_json.empty()) {
    check(pjl_tree_from_json(read_file(from_json).c_str(), &raw));
  } else {
    if (f.empty()) throw CliError{"expand needs a polynomial or --from-json"};
    PolyPtr p = parse(f);
    ConfigPtr cfg = config(c);
    check(pjl_expand(p.get(), cfg.get(), &raw));
  }
  TreePtr tree(raw);
  char* out = nullptr;
  if (!tree_out.empty()) {
    check(pjl_tree_to_json(tree.get(), &out));
    std::ofstream(tree_out) << take(out) << "\n";
  }
  if (c.json && from_json.empty() && tree_out.empty()) {
    check(pjl_tree_to_json(tree.get(), &out));
    std::cout << take(out) << "\n";
    return kExitOk;
  }
  check(pjl_tree_summary_json(tree.get(), &out));
  Json s = Json::parse(take(out));
  if (c.json) {
    std::cout << s.dump(2) << "\n";
  } else {
    print_tree_summary(s);
  }
  return kExitOk;
}

int cmd_intersect(const Common& c, const std::string& f, const std::string& g) {
  PolyPtr pf = parse(f), pg = parse(g);
  ConfigPtr cfg = config(c);
  char* out = nullptr;
  check(pjl_intersect_json(pf.get(), pg.get(), cfg.get(), &out));
  Json r = Json::parse(take(out));
  if (c.json) {
    std::cout << r.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "xi = " << str(r["xi"]) << (r["jacobian_pair"].get<bool>() ? ", Jacobian pair" : "") << "\n";
  const Json& a = r["fxi_g"];
  std::cout << "I(f - xi, g): resultant " << a["resultant"] << ", root orders " << str(a["root_orders"])
            << ", minor " << str(a["minor_formula"]) << ", major " << str(a["major_formula"]) << " / "
            << str(a["major_formula_delta"]) << "\n";
  const Json& b = r["fxi_fy"];
  std::cout << "I(f - xi, f_y): resultant " << b["resultant"] << ", split formula " << str(b["split_formula"])
            << ", minor " << str(b["minor_formula"]) << "\n";
  std::cout << "routes agree: " << (r["agree"].get<bool>() ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_caselab_analyze(const Common& c, const std::string& key, const std::string& file, bool no_obstruction) {
  char* out = nullptr;
  int ruled_out = 0;
  const int obstruction = no_obstruction ? 0 : 1;
  if (!file.empty()) {
    check(pjl_caselab_analyze_case_json(read_file(file).c_str(), obstruction, &out, &ruled_out));
  } else {
    check(pjl_caselab_analyze_json(key.c_str(), obstruction, &out, &ruled_out));
  }
  Json v = Json::parse(take(out));
  if (c.json) {
    std::cout << v.dump(2) << "\n";
  } else {
    std::cout << "case " << str(v["case"]["name"]) << ": " << v["patterns"].size() << " pattern(s)"
              << (v["obstruction_applied"].get<bool>() ? ", order-1 principal splits excluded" : "") << "\n";
    for (const auto& p : v["patterns"]) {
      std::cout << "  " << str(p["descriptor"]) << ": minor route " << str(p["i_minor"]) << ", major route "
                << str(p["i_major"]);
      if (p["contradiction"].get<bool>()) {
        std::cout << "  contradiction";
      } else if (p["obstructed"].get<bool>() && v["obstruction_applied"].get<bool>()) {
        std::cout << "  equal, excluded by the semigroup obstruction";
      } else {
        std::cout << "  survives";
      }
      std::cout << "\n";
    }
    std::cout << (ruled_out ? "ruled out" : "not ruled out") << "\n";
  }
  return ruled_out ? kExitContradiction : kExitOk;
}

int cmd_caselab_list(const Common& c) {
  char* out = nullptr;
  check(pjl_caselab_list_json(&out));
  Json j = Json::parse(take(out));
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& k : j["cases"])
      std::cout << str(k["name"]) << ": delta2 " << str(k["delta2"]) << ", delta1 " << str(k["delta1"]) << ", V3 "
                << k["V3"] << ", V2 " << k["V2"] << "\n";
  }
  return kExitOk;
}

int cmd_semigroup(const Common& c, const std::vector<long>& delta, bool strict) {
  char* out = nullptr;
  check(pjl_semigroup_json(delta.data(), delta.size(), strict ? 1 : 0, &out));
  Json j = Json::parse(take(out));
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "delta " << j["delta"].dump() << "\nd " << j["d"].dump() << "\nq " << j["q"].dump() << "\nM "
              << j["M"].dump() << "\n";
    std::cout << (strict ? "strict" : "loose") << " validation: " << (j["valid"].get<bool>() ? "valid" : "invalid")
              << (j["reason"].get<std::string>().empty() ? "" : " (" + j["reason"].get<std::string>() + ")") << "\n";
    for (const auto& l : j["lemma"])
      std::cout << "k=" << l["k"] << ": in " << l["in_part"] << ", not-in " << l["notin_part"] << "\n";
  }
  return kExitOk;
}

int cmd_ode(const Common& c, const std::vector<std::string>& p, int l, const std::string& cc) {
  std::vector<const char*> ptrs;
  for (const auto& s : p) ptrs.push_back(s.c_str());
  char* out = nullptr;
  check(pjl_ode_json(ptrs.data(), ptrs.size(), l, cc.c_str(), &out));
  Json j = Json::parse(take(out));
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "p = " << str(j["p"]) << ", l = " << j["l"] << ", c = " << str(j["c"]) << "\nq = " << str(j["q"])
              << "\na = " << str(j["a"]) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& suite, int count) {
  std::vector<std::string> suites;
  if (suite == "all") {
    char* out = nullptr;
    check(pjl_suite_names_json(&out));
    suites = Json::parse(take(out)).get<std::vector<std::string>>();
  } else {
    suites.push_back(suite);
  }
  ConfigPtr cfg = config(c);
  bool all = true;
  Json results = Json::array();
  for (const auto& s : suites) {
    char* out = nullptr;
    int passed = 0;
    check(pjl_verify_json(s.c_str(), cfg.get(), count, &out, &passed));
    Json r = Json::parse(take(out));
    all = all && passed;
    if (c.json) {
      results.push_back(r);
      continue;
    }
    std::printf("%-16s %d/%d %s (%.2fs)\n", s.c_str(), r["passed"].get<int>(), r["cases"].get<int>(),
                passed ? "pass" : "FAIL", r["seconds"].get<double>());
    if (!r["summary"].get<std::string>().empty()) std::printf("  %s\n", r["summary"].get<std::string>().c_str());
    for (const auto& f : r["failures"]) std::printf("  failed: %s\n", f.get<std::string>().c_str());
  }
  if (c.json) std::cout << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
  return all ? kExitOk : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Puiseux root trees, intersection formulas and case analyses for plane curve pairs"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--xi", common.xi, "Shift xi as p/q; picked from the seed when omitted");
  app.add_option("--cutoff", common.cutoff, "Expansion cutoff order as p/q");
  app.add_option("--ext-budget", common.ext_budget, "Largest number field degree")->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Random seed")->envname("PJL_SEED");
  app.add_flag("--json", common.json, "Emit JSON");
  app.fallthrough();

  std::string f, g, from_json, tree_out;
  auto* expand = app.add_subcommand("expand", "Root tree of f - xi");
  expand->add_option("f", f, "Polynomial in x, y");
  expand->add_option("--from-json", from_json, "Re-ingest a serialized tree");
  expand->add_option("--tree-out", tree_out, "Write the serialized tree to a file");

  auto* intersect = app.add_subcommand("intersect", "Every intersection route for (f - xi, g) and (f - xi, f_y)");
  intersect->add_option("f", f)->required();
  intersect->add_option("g", g)->required();

  auto* caselab = app.add_subcommand("caselab", "Case analyses for degree pairs");
  caselab->require_subcommand(1);
  std::string case_key, case_file;
  bool no_obstruction = false;
  auto* analyze = caselab->add_subcommand("analyze", "Enumerate splitting patterns and compare both routes");
  auto* key_opt = analyze->add_option("--case", case_key, "Built-in case, e.g. 99x66");
  analyze->add_option("--case-file", case_file, "Case data as JSON")->excludes(key_opt);
  analyze->add_flag("--no-obstruction", no_obstruction, "Keep order-1 principal minor splits");
  auto* list = caselab->add_subcommand("list", "Built-in cases");

  std::vector<long> delta;
  bool strict = false;
  auto* semigroup = app.add_subcommand("semigroup", "Derived sequences and the semigroup lemma for delta_0 .. delta_h");
  semigroup->add_option("delta", delta)->required();
  semigroup->add_flag("--strict", strict, "Apply every validity axiom");

  std::vector<std::string> p;
  int l = 2;
  std::string c = "1";
  auto* ode = app.add_subcommand("ode", "Solve D(m, m(l-1), p, q) = c p^l for q");
  ode->add_option("--p", p, "Coefficients of p over Q, constant first")->required()->delimiter(',');
  ode->add_option("--l", l)->check(CLI::Range(2, 64));
  ode->add_option("--c", c);

  std::string suite;
  int count = 0;
  auto* verify = app.add_subcommand("verify", "Run a seeded property suite, or all");
  verify->add_option("suite", suite)->required();
  verify->add_option("--count", count, "Cases; the suite default when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(common, f, from_json, tree_out);
    if (*intersect) return cmd_intersect(common, f, g);
    if (*analyze) {
      if (case_key.empty() && case_file.empty()) throw CliError{"caselab analyze needs --case or --case-file"};
      return cmd_caselab_analyze(common, case_key, case_file, no_obstruction);
    }
    if (*list) return cmd_caselab_list(common);
    if (*semigroup) return cmd_semigroup(common, delta, strict);
    if (*ode) return cmd_ode(common, p, l, c);
    if (*verify) return cmd_verify(common, suite, count);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
