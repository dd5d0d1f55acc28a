#include "pjl/io.hpp"

#include <cctype>
#include <map>

#include "pjl/error.hpp"

namespace pjl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly parse() {
    BiPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly r = term();
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  BiPoly term() {
    BiPoly r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        skip();
        std::size_t at = pos_;
        BiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) throw SyntaxError(at, "division by a non-constant or zero");
        r = r * Rational(1 / d.coeff(0, 0));
      } else {
        return r;
      }
    }
  }

  BiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t at = pos_;
    std::string digits = integer();
    if (digits.empty()) throw SyntaxError(at, "expected a nonnegative integer exponent");
    if (digits.size() > 4 || std::stol(digits) > 1000) throw SyntaxError(at, "exponent too large");
    return base.pow(static_cast<unsigned>(std::stol(digits)));
  }

  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  BiPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "expected an operand");
    const char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly r = expr();
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly(Rational(integer()));
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::kRoot: return "root";
    case NodeKind::kSplit: return "split";
    case NodeKind::kLeaf: return "leaf";
  }
  return "?";
}

NodeKind kind_from(const std::string& s) {
  if (s == "root") return NodeKind::kRoot;
  if (s == "split") return NodeKind::kSplit;
  if (s == "leaf") return NodeKind::kLeaf;
  fail(ErrorCode::kInvalidArgument, "unknown node kind " + s);
}

Json qpoly_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
  return a;
}

QPoly qpoly_from(const Json& j) {
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return QPoly(v);
}

Json element_json(const FieldElement& e) { return qpoly_json(e.rep()); }

Json unipoly_json(const UniPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(element_json(c));
  return a;
}

UniPoly unipoly_from(const Json& j, const FieldPtr& k) {
  std::vector<FieldElement> v;
  for (const auto& c : j) v.emplace_back(k, qpoly_from(c));
  return UniPoly(k, v);
}

Json puiseux_json(const TruncatedPuiseux& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) terms.push_back(Json::array({rational_json(e), element_json(c)}));
  Json j;
  j["terms"] = terms;
  j["cutoff"] = p.cutoff ? rational_json(*p.cutoff) : Json();
  return j;
}

TruncatedPuiseux puiseux_from(const Json& j, const FieldPtr& k) {
  TruncatedPuiseux p;
  p.field = k;
  for (const auto& t : j.at("terms")) p.terms.emplace_back(rational_from_json(t.at(0)), FieldElement(k, qpoly_from(t.at(1))));
  if (!j.at("cutoff").is_null()) p.cutoff = rational_from_json(j.at("cutoff"));
  return p;
}

Json branch_json(const Branch& b) {
  Json j;
  j["kind"] = b.kind == BranchKind::kMajor ? "major" : "minor";
  j["f_mult"] = b.f_mult;
  j["g_mult"] = b.g_mult;
  j["conj"] = b.conj;
  j["delta"] = rational_json(b.delta);
  j["D"] = b.D;
  return j;
}

Json opt_rational(const std::optional<Rational>& r) { return r ? rational_json(*r) : Json(); }

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(ErrorCode::kInvalidArgument, "rational must be a \"p/q\" string or an integer");
  return parse_rational(j.get<std::string>());
}

Json tree_to_json(const RootTree& tree) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "root_tree";
  Json polys = Json::array();
  for (const auto& p : tree.polys) polys.push_back(p.to_string());
  j["polys"] = polys;
  j["labels"] = tree.label_names;
  j["options"] = {{"cutoff", rational_json(tree.options.cutoff)},
                  {"ext_budget", tree.options.ext_budget},
                  {"separation_limit", opt_rational(tree.options.separation_limit)}};

  std::map<const NumberField*, int> index;
  Json fields = Json::array();
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) {
    auto [it, fresh] = index.emplace(n.field.get(), static_cast<int>(fields.size()));
    if (fresh) {
      Json tower = Json::array();
      for (const auto& s : n.field->steps()) tower.push_back({{"generator", s.generator}, {"minpoly", s.minpoly}});
      fields.push_back({{"degree", n.field->degree()}, {"minpoly", qpoly_json(n.field->minpoly())}, {"tower", tower}});
    }
    Json labels = Json::array();
    for (const auto& l : n.labels)
      labels.push_back({{"count", l.count},
                        {"form", unipoly_json(l.form)},
                        {"lambda", rational_json(l.lambda)},
                        {"e", l.e},
                        {"v", rational_json(l.v)}});
    Json node;
    node["id"] = n.id;
    node["parent"] = n.parent;
    node["children"] = n.children;
    node["kind"] = kind_name(n.kind);
    node["field"] = it->second;
    node["prefix"] = puiseux_json(n.prefix);
    node["delta"] = opt_rational(n.delta);
    node["conj"] = n.conj;
    node["ramification"] = n.ramification;
    node["labels"] = labels;
    node["leaf_label"] = n.leaf_label;
    node["separation"] = rational_json(n.separation);
    node["joint_e"] = n.joint_e;
    nodes.push_back(node);
  }
  j["fields"] = fields;
  j["nodes"] = nodes;
  return j;
}

RootTree tree_from_json(const Json& j) {
  try {
    if (j.at("schema") != kSchema || j.at("kind") != "root_tree")
      fail(ErrorCode::kInvalidArgument, "not a pjl/1 root tree");
    RootTree t;
    for (const auto& p : j.at("polys")) {
      t.polys.push_back(parse_poly(p.get<std::string>()));
      t.tpolys.push_back(to_t_domain(t.polys.back()));
    }
    t.label_names = j.at("labels").get<std::vector<std::string>>();
    const Json& o = j.at("options");
    t.options.cutoff = rational_from_json(o.at("cutoff"));
    t.options.ext_budget = o.at("ext_budget").get<int>();
    if (!o.at("separation_limit").is_null()) t.options.separation_limit = rational_from_json(o.at("separation_limit"));

    std::vector<FieldPtr> fields;
    for (const auto& f : j.at("fields")) {
      QPoly minpoly = qpoly_from(f.at("minpoly"));
      if (minpoly.degree() == 1) {
        fields.push_back(NumberField::rationals());
        continue;
      }
      std::vector<TowerStep> steps;
      for (const auto& s : f.at("tower")) steps.push_back({s.at("generator"), s.at("minpoly")});
      fields.push_back(NumberField::make(minpoly, steps));
    }
    for (const auto& nj : j.at("nodes")) {
      TreeNode n;
      n.id = nj.at("id");
      n.parent = nj.at("parent");
      n.children = nj.at("children").get<std::vector<int>>();
      n.kind = kind_from(nj.at("kind"));
      n.field = fields.at(nj.at("field").get<std::size_t>());
      n.prefix = puiseux_from(nj.at("prefix"), n.field);
      if (!nj.at("delta").is_null()) n.delta = rational_from_json(nj.at("delta"));
      n.conj = nj.at("conj");
      n.ramification = nj.at("ramification");
      for (const auto& lj : nj.at("labels")) {
        LabelData l;
        l.count = lj.at("count");
        l.form = unipoly_from(lj.at("form"), n.field);
        l.lambda = rational_from_json(lj.at("lambda"));
        l.e = lj.at("e");
        l.v = rational_from_json(lj.at("v"));
        n.labels.push_back(std::move(l));
      }
      n.leaf_label = nj.at("leaf_label");
      n.separation = rational_from_json(nj.at("separation"));
      n.joint_e = nj.at("joint_e");
      if (n.id != static_cast<int>(t.nodes.size())) fail(ErrorCode::kInvalidArgument, "node ids must be consecutive");
      t.nodes.push_back(std::move(n));
    }
    if (t.nodes.empty()) fail(ErrorCode::kInvalidArgument, "tree without nodes");
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("malformed tree json: ") + e.what());
  }
}

Json classification_json(const RootTree& tree, const RootClassification& c) {
  Json roots = Json::array();
  for (const auto& r : c.roots) {
    const char* kind = r.kind == RootKind::kMajor ? "major" : (r.kind == RootKind::kMinor ? "minor" : "other");
    roots.push_back({{"leaf", r.leaf},
                     {"conj", r.conj},
                     {"kind", kind},
                     {"ord_g", rational_json(r.ord_g)},
                     {"delta_alpha", rational_json(r.delta_alpha)},
                     {"sigma_node", r.sigma_node},
                     {"sigma_delta", opt_rational(tree.nodes.at(static_cast<std::size_t>(r.sigma_node)).delta)},
                     {"D", r.D},
                     {"lambda_g", rational_json(r.lambda_g)},
                     {"sigma_final", r.sigma_final}});
  }
  return {{"major", c.major_count()}, {"minor", c.minor_count()}, {"roots", roots}};
}

Json report_json(const IntersectionReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "intersection_report";
  j["xi"] = rational_json(r.xi);
  j["generic"] = {{"accepted", r.certificate.accepted()}, {"resultant_degree", r.certificate.resultant_degree}};
  j["jacobian_pair"] = r.jacobian_pair;
  j["fxi_g"] = {{"resultant", r.fxi_g_resultant},
                {"root_orders", rational_json(r.fxi_g_root_orders)},
                {"minor_formula", opt_rational(r.fxi_g_minor)},
                {"major_formula", opt_rational(r.fxi_g_major)},
                {"major_formula_delta", opt_rational(r.fxi_g_major_delta)}};
  j["fxi_fy"] = {{"resultant", r.fxi_fy_resultant},
                 {"split_formula", rational_json(r.fxi_fy_split)},
                 {"minor_formula", opt_rational(r.fxi_fy_minor)}};
  j["minor_roots"] = r.minor_roots < 0 ? Json() : Json(r.minor_roots);
  j["major_roots"] = r.major_roots < 0 ? Json() : Json(r.major_roots);
  j["agree"] = r.agree();
  return j;
}

Json case_json(const MohCaseData& c) {
  Json j;
  j["name"] = c.name;
  j["n"] = c.n;
  j["m"] = c.m;
  j["M2"] = c.M2;
  j["M3"] = c.M3;
  j["V3"] = c.V3;
  j["V2"] = c.V2;
  j["delta2"] = rational_json(c.delta2);
  j["delta1"] = rational_json(c.delta1);
  j["sigma2_roots"] = c.sigma2_roots;
  j["major_final_size"] = c.major_final_size;
  j["principal_minor"] = c.principal_minor;
  j["principal_may_split"] = c.principal_may_split;
  j["u_s"] = c.u_s;
  j["d_s"] = c.d_s ? Json(*c.d_s) : Json();
  j["max_order"] = c.max_order;
  j["max_denominator"] = c.max_denominator;
  return j;
}

MohCaseData case_from_json(const Json& j) {
  try {
    MohCaseData c;
    c.name = j.value("name", std::string("user"));
    c.n = j.at("n");
    c.m = j.at("m");
    c.M2 = j.value("M2", 0L);
    c.M3 = j.value("M3", 0L);
    c.V3 = j.value("V3", 0L);
    c.V2 = j.value("V2", 0L);
    c.delta2 = rational_from_json(j.at("delta2"));
    c.delta1 = rational_from_json(j.at("delta1"));
    c.sigma2_roots = j.at("sigma2_roots");
    c.major_final_size = j.at("major_final_size");
    c.principal_minor = j.at("principal_minor");
    c.principal_may_split = j.value("principal_may_split", true);
    c.u_s = j.at("u_s");
    if (j.contains("d_s") && !j.at("d_s").is_null()) c.d_s = j.at("d_s").get<long>();
    c.max_order = j.value("max_order", c.max_order);
    c.max_denominator = j.value("max_denominator", c.max_denominator);
    validate_case(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("malformed case json: ") + e.what());
  }
}

Json verdict_json(const CaseVerdict& v) {
  Json pats = Json::array();
  for (const auto& p : v.patterns) {
    Json branches = Json::array();
    for (const auto& b : p.pattern.branches) branches.push_back(branch_json(b));
    pats.push_back({{"descriptor", p.pattern.descriptor},
                    {"sigma2_blocks", p.pattern.sigma2_blocks},
                    {"principal_split", opt_rational(p.pattern.principal_split)},
                    {"principal_parts", p.pattern.principal_parts},
                    {"branches", branches},
                    {"i_minor", rational_json(p.i_minor)},
                    {"i_major", rational_json(p.i_major)},
                    {"contradiction", p.contradiction},
                    {"obstructed", p.obstructed}});
  }
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "case_verdict";
  j["case"] = case_json(v.data);
  j["obstruction_applied"] = v.obstruction_applied;
  j["patterns"] = pats;
  j["arithmetic_survivors"] = v.arithmetic_survivors;
  j["survivors"] = v.survivors;
  j["ruled_out"] = v.survivors.empty();
  return j;
}

Json delta_sequence_json(const DeltaSequence& s, bool strict) {
  Validity val = validate(s, strict);
  Json lemma = Json::array();
  for (int k = 2; k <= s.h(); ++k) {
    auto [in, notin] = semigroup_lemma_check(s, k);
    lemma.push_back({{"k", k}, {"in_part", in}, {"notin_part", notin}});
  }
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "delta_sequence";
  j["delta"] = s.delta;
  j["d"] = std::vector<long>(s.d.begin() + 1, s.d.end());
  j["q"] = s.h() >= 2 ? std::vector<long>(s.q.begin() + 2, s.q.end()) : std::vector<long>{};
  j["M"] = std::vector<long>(s.M.begin() + 1, s.M.end());
  j["strict"] = strict;
  j["valid"] = val.ok;
  j["reason"] = val.reason;
  j["lemma"] = lemma;
  return j;
}

Json ode_json(const UniPoly& p, int l, const FieldElement& c, int m, const OdeSolution& s) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "special_ode";
  j["p"] = p.to_string();
  j["l"] = l;
  j["c"] = c.to_string();
  j["m"] = m;
  j["q"] = s.q.to_string();
  j["a"] = s.a.to_string();
  j["kernel_dimension"] = s.kernel_dimension;
  return j;
}

}  // namespace pjl
