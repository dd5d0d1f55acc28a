#include "pjl/pjl.h"

#include <cstring>
#include <optional>
#include <string>

#include "pjl/caselab.hpp"
#include "pjl/error.hpp"
#include "pjl/intersection.hpp"
#include "pjl/io.hpp"
#include "pjl/minor_split.hpp"
#include "pjl/suites.hpp"

struct pjl_poly {
  pjl::BiPoly rep;
};

struct pjl_config {
  std::optional<pjl::Rational> cutoff;
  std::optional<pjl::Rational> xi;
  int ext_budget = pjl::kDefaultExtensionBudget;
  std::uint64_t seed = 0;
};

struct pjl_tree {
  pjl::RootTree rep;
  pjl::Rational xi;
};

namespace {

thread_local std::string g_last_error;

pjl_status to_status(pjl::ErrorCode c) {
  using pjl::ErrorCode;
  switch (c) {
    case ErrorCode::kInvalidArgument: return PJL_ERR_INVALID_ARGUMENT;
    case ErrorCode::kSyntax: return PJL_ERR_SYNTAX;
    case ErrorCode::kPrecondition: return PJL_ERR_PRECONDITION;
    case ErrorCode::kZeroPolynomial: return PJL_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::kZeroResultant: return PJL_ERR_ZERO_RESULTANT;
    case ErrorCode::kExtensionBudgetExceeded: return PJL_ERR_EXTENSION_BUDGET;
    case ErrorCode::kCutoffTooSmall: return PJL_ERR_CUTOFF_TOO_SMALL;
    case ErrorCode::kNotSeparated: return PJL_ERR_NOT_SEPARATED;
    case ErrorCode::kNotJacobianPair: return PJL_ERR_NOT_JACOBIAN_PAIR;
    case ErrorCode::kNotSquarefree: return PJL_ERR_NOT_SQUAREFREE;
    case ErrorCode::kNoSolution: return PJL_ERR_NO_SOLUTION;
    case ErrorCode::kRetriesExhausted: return PJL_ERR_RETRIES_EXHAUSTED;
    case ErrorCode::kIndexOutOfRange: return PJL_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kNotFound: return PJL_ERR_NOT_FOUND;
    case ErrorCode::kInternal: return PJL_ERR_INTERNAL;
  }
  return PJL_ERR_INTERNAL;
}

template <class F>
pjl_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return PJL_OK;
  } catch (const pjl::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("json: ") + e.what();
    return PJL_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PJL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PJL_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) pjl::fail(pjl::ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

pjl::ExpandOptions options_for(const pjl_config* c, const pjl::BiPoly& f) {
  pjl::ExpandOptions o;
  o.cutoff = c && c->cutoff ? *c->cutoff : pjl::default_cutoff(f);
  o.ext_budget = c ? c->ext_budget : pjl::kDefaultExtensionBudget;
  return o;
}

pjl::Rational xi_for(const pjl_config* c, const pjl::BiPoly& f) {
  if (c && c->xi) return *c->xi;
  return pjl::pick_generic_xi(f, c ? c->seed : 0).xi;
}

pjl_status analyze_case(const pjl::MohCaseData& data, int apply_obstruction, char** out, int* ruled_out) {
  pjl::CaseVerdict v = pjl::analyze(data, apply_obstruction != 0);
  if (ruled_out) *ruled_out = v.survivors.empty() ? 1 : 0;
  *out = dup_string(pjl::verdict_json(v).dump(2));
  return PJL_OK;
}

}  // namespace

extern "C" {

const char* pjl_last_error(void) { return g_last_error.c_str(); }

const char* pjl_status_name(pjl_status status) {
  switch (status) {
    case PJL_OK: return "Ok";
    case PJL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case PJL_ERR_SYNTAX: return "Syntax";
    case PJL_ERR_PRECONDITION: return "Precondition";
    case PJL_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case PJL_ERR_ZERO_RESULTANT: return "ZeroResultant";
    case PJL_ERR_EXTENSION_BUDGET: return "ExtensionBudgetExceeded";
    case PJL_ERR_CUTOFF_TOO_SMALL: return "CutoffTooSmall";
    case PJL_ERR_NOT_SEPARATED: return "NotSeparated";
    case PJL_ERR_NOT_JACOBIAN_PAIR: return "NotJacobianPair";
    case PJL_ERR_NOT_SQUAREFREE: return "NotSquarefree";
    case PJL_ERR_NO_SOLUTION: return "NoSolution";
    case PJL_ERR_RETRIES_EXHAUSTED: return "RetriesExhausted";
    case PJL_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case PJL_ERR_NOT_FOUND: return "NotFound";
    case PJL_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void pjl_string_free(char* s) { std::free(s); }

pjl_status pjl_poly_parse(const char* text, pjl_poly** out, size_t* error_offset) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    try {
      *out = new pjl_poly{pjl::parse_poly(text)};
    } catch (const pjl::SyntaxError& e) {
      if (error_offset) *error_offset = e.offset();
      throw;
    }
  });
}

void pjl_poly_free(pjl_poly* p) { delete p; }

pjl_status pjl_poly_to_string(const pjl_poly* p, char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = dup_string(p->rep.to_string());
  });
}

int pjl_poly_deg_y(const pjl_poly* p) { return p ? p->rep.deg_y() : -1; }

pjl_config* pjl_config_new(void) { return new (std::nothrow) pjl_config(); }

void pjl_config_free(pjl_config* c) { delete c; }

pjl_status pjl_config_set_cutoff(pjl_config* c, const char* cutoff) {
  return guarded([&] {
    need(c, "config");
    need(cutoff, "cutoff");
    pjl::Rational r = pjl::parse_rational(cutoff);
    if (r <= 0) pjl::fail(pjl::ErrorCode::kInvalidArgument, "cutoff must be positive");
    c->cutoff = r;
  });
}

pjl_status pjl_config_set_xi(pjl_config* c, const char* xi) {
  return guarded([&] {
    need(c, "config");
    need(xi, "xi");
    c->xi = pjl::parse_rational(xi);
  });
}

pjl_status pjl_config_set_ext_budget(pjl_config* c, int budget) {
  return guarded([&] {
    need(c, "config");
    if (budget < 1) pjl::fail(pjl::ErrorCode::kInvalidArgument, "extension budget must be at least 1");
    c->ext_budget = budget;
  });
}

void pjl_config_set_seed(pjl_config* c, uint64_t seed) {
  if (c) c->seed = seed;
}

pjl_status pjl_expand(const pjl_poly* f, const pjl_config* c, pjl_tree** out) {
  return guarded([&] {
    need(f, "poly");
    need(out, "out");
    const pjl::Rational xi = xi_for(c, f->rep);
    *out = new pjl_tree{pjl::expand_root_tree(f->rep, xi, options_for(c, f->rep)), xi};
  });
}

void pjl_tree_free(pjl_tree* t) { delete t; }

pjl_status pjl_tree_to_json(const pjl_tree* t, char** out) {
  return guarded([&] {
    need(t, "tree");
    need(out, "out");
    pjl::Json j = pjl::tree_to_json(t->rep);
    j["xi"] = pjl::rational_json(t->xi);
    *out = dup_string(j.dump(2));
  });
}

pjl_status pjl_tree_from_json(const char* json, pjl_tree** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    pjl::Json j = pjl::Json::parse(json);
    pjl::Rational xi = j.contains("xi") ? pjl::rational_from_json(j.at("xi")) : pjl::Rational(0);
    *out = new pjl_tree{pjl::tree_from_json(j), xi};
  });
}

pjl_status pjl_tree_summary_json(const pjl_tree* t, char** out) {
  return guarded([&] {
    need(t, "tree");
    need(out, "out");
    const pjl::RootTree& tree = t->rep;
    pjl::Json j;
    j["schema"] = pjl::kSchema;
    j["kind"] = "tree_summary";
    j["xi"] = pjl::rational_json(t->xi);
    j["nodes"] = tree.nodes.size();
    pjl::Json labels = pjl::Json::array();
    for (std::size_t l = 0; l < tree.label_names.size(); ++l) {
      const int label = static_cast<int>(l);
      pjl::Json splits = pjl::Json::array();
      for (int id : tree.split_nodes(label)) {
        const pjl::TreeNode& n = tree.nodes[static_cast<std::size_t>(id)];
        const pjl::LabelData& d = n.labels[l];
        splits.push_back({{"node", id},
                          {"delta", n.delta ? pjl::rational_json(*n.delta) : pjl::Json()},
                          {"lambda", pjl::rational_json(d.lambda)},
                          {"e", d.e},
                          {"conj", n.conj},
                          {"form", d.form.to_string()}});
      }
      long roots = 0;
      for (int leaf : tree.leaves(label)) roots += tree.nodes[static_cast<std::size_t>(leaf)].conj;
      labels.push_back({{"name", tree.label_names[l]},
                        {"poly", tree.polys[l].to_string()},
                        {"roots", roots},
                        {"split_nodes", splits},
                        {"split_formula", pjl::rational_json(pjl::split_formula(tree, label))}});
    }
    j["labels"] = labels;
    *out = dup_string(j.dump(2));
  });
}

pjl_status pjl_intersect_json(const pjl_poly* f, const pjl_poly* g, const pjl_config* c, char** out) {
  return guarded([&] {
    need(f, "f");
    need(g, "g");
    need(out, "out");
    if (!f->rep.is_monic_y() || !g->rep.is_monic_y())
      pjl::fail(pjl::ErrorCode::kPrecondition, "f and g must be monic in y");
    const pjl::Rational xi = xi_for(c, f->rep);
    pjl::ExpandOptions o = options_for(c, f->rep * g->rep);
    *out = dup_string(pjl::report_json(pjl::intersect(f->rep, g->rep, xi, o)).dump(2));
  });
}

pjl_status pjl_caselab_analyze_json(const char* key, int apply_obstruction, char** out, int* ruled_out) {
  return guarded([&] {
    need(key, "key");
    need(out, "out");
    analyze_case(pjl::find_case(key), apply_obstruction, out, ruled_out);
  });
}

pjl_status pjl_caselab_analyze_case_json(const char* case_json, int apply_obstruction, char** out,
                                         int* ruled_out) {
  return guarded([&] {
    need(case_json, "case_json");
    need(out, "out");
    analyze_case(pjl::case_from_json(pjl::Json::parse(case_json)), apply_obstruction, out, ruled_out);
  });
}

pjl_status pjl_caselab_list_json(char** out) {
  return guarded([&] {
    need(out, "out");
    pjl::Json j;
    j["schema"] = pjl::kSchema;
    j["kind"] = "case_list";
    pjl::Json cases = pjl::Json::array();
    for (const auto& c : pjl::builtin_cases()) cases.push_back(pjl::case_json(c));
    j["cases"] = cases;
    *out = dup_string(j.dump(2));
  });
}

pjl_status pjl_semigroup_json(const long* delta, size_t count, int strict, char** out) {
  return guarded([&] {
    need(out, "out");
    if (count > 0) need(delta, "delta");
    pjl::DeltaSequence s = pjl::derive_dqM(std::vector<long>(delta, delta + count));
    *out = dup_string(pjl::delta_sequence_json(s, strict != 0).dump(2));
  });
}

pjl_status pjl_semigroup_member(long target, const long* gens, size_t count, int* member) {
  return guarded([&] {
    need(member, "member");
    if (count > 0) need(gens, "gens");
    *member = pjl::semigroup_member(target, std::vector<long>(gens, gens + count)) ? 1 : 0;
  });
}

pjl_status pjl_ode_json(const char* const* p_coeffs, size_t count, int l, const char* c, char** out) {
  return guarded([&] {
    need(out, "out");
    need(c, "c");
    if (count > 0) need(p_coeffs, "p_coeffs");
    const pjl::FieldPtr q = pjl::NumberField::rationals();
    std::vector<pjl::FieldElement> coeffs;
    for (size_t i = 0; i < count; ++i) coeffs.emplace_back(q, pjl::parse_rational(p_coeffs[i]));
    pjl::UniPoly p(q, coeffs);
    const pjl::FieldElement cc(q, pjl::parse_rational(c));
    const int m = static_cast<int>(p.degree());
    pjl::OdeSolution s = pjl::solve_special_ode(p, l, cc, m);
    *out = dup_string(pjl::ode_json(p, l, cc, m, s).dump(2));
  });
}

pjl_status pjl_verify_json(const char* suite, const pjl_config* c, int count, char** out, int* all_passed) {
  return guarded([&] {
    need(suite, "suite");
    need(out, "out");
    pjl::ExpandOptions o;
    if (c && c->cutoff) o.cutoff = *c->cutoff;
    if (c) o.ext_budget = c->ext_budget;
    pjl::SuiteResult r = pjl::run_suite(suite, c ? c->seed : 0, count, o);
    if (all_passed) *all_passed = r.ok() ? 1 : 0;
    pjl::Json j;
    j["schema"] = pjl::kSchema;
    j["kind"] = "suite_result";
    j["suite"] = r.name;
    j["seed"] = c ? c->seed : 0;
    j["cases"] = r.cases;
    j["passed"] = r.passed;
    j["ok"] = r.ok();
    j["summary"] = r.summary;
    j["failures"] = r.failures;
    j["seconds"] = r.seconds;
    *out = dup_string(j.dump(2));
  });
}

pjl_status pjl_suite_names_json(char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup_string(pjl::Json(pjl::suite_names()).dump());
  });
}

}  // extern "C"
