#include "pjl/intersection.hpp"

#include <algorithm>
#include <map>

#include "pjl/error.hpp"

namespace pjl {

namespace {

bool constant_nonzero(const BiPoly& p) { return !p.is_zero() && p.is_constant(); }

BiPoly shifted_poly(const BiPoly& f, const Rational& xi) { return f - BiPoly(xi); }

void require_coprime(const BiPoly& f, const BiPoly& g) {
  if (resultant_y(f, g).is_zero()) fail(ErrorCode::kZeroResultant, "the polynomials share a factor");
}

void require_generic(const BiPoly& f, const Rational& xi) {
  if (!check_generic(f, xi).accepted())
    fail(ErrorCode::kPrecondition, "xi = " + to_string(xi) + " is not generic: f - xi is not squarefree");
}

}  // namespace

long intersection_resultant(const BiPoly& f, const BiPoly& g) {
  if (!f.has_constant_lc_y() || !g.has_constant_lc_y())
    fail(ErrorCode::kPrecondition, "intersection needs constant leading coefficients in y");
  QPoly r = resultant_y(f, g);
  if (r.is_zero()) fail(ErrorCode::kZeroResultant, "resultant vanishes identically");
  return r.degree();
}

Rational separation_bound(const std::vector<BiPoly>& polys) {
  long total = 0;
  Rational rho = 0;
  for (const auto& p : polys) {
    total += p.deg_y();
    for (const auto& e : newton_polygon(to_t_domain(p))) rho = std::min(rho, e.slope);
  }
  return -Rational(total * total - 1) * rho + 1;
}

ExpandOptions with_rigorous_limit(const std::vector<BiPoly>& polys, ExpandOptions options) {
  Rational b = std::max(separation_bound(polys), options.cutoff);
  if (!options.separation_limit || *options.separation_limit < b) options.separation_limit = b;
  return options;
}

Rational WeightedTree::order(int leaf, int poly) const {
  Rational s = 0;
  for (const auto& [label, mult] : parts.at(static_cast<std::size_t>(poly)))
    s += Rational(mult) * tree.order_at_leaf(leaf, label);
  return s;
}

std::vector<std::pair<int, int>> WeightedTree::leaves(int poly) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [label, mult] : parts.at(static_cast<std::size_t>(poly)))
    for (int leaf : tree.leaves(label)) out.emplace_back(leaf, mult);
  return out;
}

WeightedTree expand_weighted(const std::vector<BiPoly>& polys, const std::vector<std::string>& names,
                             const ExpandOptions& options) {
  WeightedTree w;
  std::vector<BiPoly> labels;
  std::vector<std::string> label_names;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<BiPoly> parts = squarefree_parts_y(polys[i]);
    std::vector<std::pair<int, int>> entry;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].deg_y() < 1) continue;
      entry.emplace_back(static_cast<int>(labels.size()), static_cast<int>(j) + 1);
      labels.push_back(parts[j]);
      label_names.push_back(parts.size() == 1 ? names.at(i) : names.at(i) + "^" + std::to_string(j + 1));
    }
    w.parts.push_back(std::move(entry));
  }
  w.tree = expand_joint(labels, label_names, with_rigorous_limit(labels, options));
  return w;
}

Rational intersection_by_root_orders(const BiPoly& f, const BiPoly& g, const ExpandOptions& options) {
  if (!f.has_constant_lc_y() || !g.has_constant_lc_y())
    fail(ErrorCode::kPrecondition, "intersection needs constant leading coefficients in y");
  if (g.deg_y() < 1 || f.deg_y() < 1) return Rational(intersection_resultant(f, g));
  require_coprime(f, g);
  WeightedTree w = expand_weighted({g, f}, {"g", "f"}, options);
  Rational s = 0;
  for (const auto& [leaf, mult] : w.leaves(0))
    s += Rational(mult * w.tree.nodes[static_cast<std::size_t>(leaf)].conj) * w.order(leaf, 1);
  return -s;
}

Rational split_formula(const RootTree& tree, int label) {
  Rational s = 0;
  for (int id : tree.split_nodes(label)) {
    const TreeNode& n = tree.nodes[static_cast<std::size_t>(id)];
    const LabelData& d = n.labels[static_cast<std::size_t>(label)];
    s += Rational(n.conj * (d.e - 1)) * d.lambda;
  }
  return -s;
}

Rational i_fxfy_split_formula(const BiPoly& f, const Rational& xi, const ExpandOptions& options) {
  require_generic(f, xi);
  BiPoly fx = shifted_poly(f, xi);
  RootTree t = expand_root_tree(f, xi, with_rigorous_limit({fx}, options));
  return split_formula(t, 0);
}

RootPartition root_partition_check(const BiPoly& f, const Rational& xi, const ExpandOptions& options) {
  require_generic(f, xi);
  RootPartition r;
  BiPoly fx = shifted_poly(f, xi);
  if (f.deg_y() >= 2) {
    WeightedTree w = expand_weighted({fx, f.dy()}, {"f_xi", "f_y"}, options);
    for (const auto& [leaf, mult] : w.leaves(1)) {
      Rational o = w.order(leaf, 0);
      long copies = mult * w.tree.nodes[static_cast<std::size_t>(leaf)].conj;
      r.at_derivative_roots.insert(r.at_derivative_roots.end(), static_cast<std::size_t>(copies), o);
    }
    for (int id : w.tree.split_nodes(0)) {
      const TreeNode& n = w.tree.nodes[static_cast<std::size_t>(id)];
      long copies = n.conj * (n.labels[0].e - 1);
      r.at_split_nodes.insert(r.at_split_nodes.end(), static_cast<std::size_t>(copies), n.labels[0].lambda);
    }
  }
  std::sort(r.at_derivative_roots.begin(), r.at_derivative_roots.end());
  std::sort(r.at_split_nodes.begin(), r.at_split_nodes.end());
  r.equal = r.at_derivative_roots == r.at_split_nodes;
  return r;
}

GenericCertificate check_generic(const BiPoly& f, const Rational& xi) {
  if (f.deg_y() < 1 || !f.has_constant_lc_y())
    fail(ErrorCode::kPrecondition, "f needs positive degree and a constant leading coefficient in y");
  GenericCertificate c;
  if (f.deg_y() == 1) {
    c.resultant_nonzero = true;
    c.resultant_degree = 0;
    return c;
  }
  QPoly r = resultant_y(shifted_poly(f, xi), f.dy());
  c.resultant_nonzero = !r.is_zero();
  c.resultant_degree = c.resultant_nonzero ? r.degree() : -1;
  return c;
}

GenericShift pick_generic_xi(const BiPoly& f, std::uint64_t seed, int max_attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 997);
  GenericShift s;
  for (s.attempts = 1; s.attempts <= max_attempts; ++s.attempts) {
    s.xi = frac(num(rng), den(rng));
    s.certificate = check_generic(f, s.xi);
    if (s.certificate.accepted()) return s;
  }
  fail(ErrorCode::kRetriesExhausted, "no generic xi found in " + std::to_string(max_attempts) + " attempts");
}

ChainRuleCheck chain_rule_residual(const BiPoly& f, const BiPoly& g, const TruncatedPuiseux& alpha,
                                   const Rational& cutoff) {
  TruncatedPuiseux exact = alpha;
  exact.cutoff.reset();
  const long den = exact.ramification();
  const Series a = exact.to_series(den);
  const long T = to_units(Rational(integer_ceil(cutoff * den)), 1);
  const TPoly F = to_t_domain(f), G = to_t_domain(g), J = to_t_domain(jacobian(f, g));
  const TPoly Fy = F.dy(), Gy = G.dy();
  const int degree = std::max({F.degree(), G.degree(), J.degree(), 1});
  const long oa = a.known_zero() ? 0 : std::min(a.ord(), 0L);
  long margin = 2 * den - oa * degree;
  for (int round = 0; round < 12; ++round, margin *= 2) {
    const long target = T + margin;
    Series fa = eval_at_series(F, a, target), ga = eval_at_series(G, a, target);
    Series fy = eval_at_series(Fy, a, target), gy = eval_at_series(Gy, a, target);
    Series ja = eval_at_series(J, a, target).shifted(-2 * den);
    Series r = Series::mul(gy, fa.derivative(), T) - Series::mul(fy, ga.derivative(), T) + ja.truncated(T);
    if (r.prec() < T) continue;
    ChainRuleCheck c;
    c.residual = r.truncated(T);
    c.known_below = frac(T, den);
    c.vanishes = c.residual.known_zero();
    return c;
  }
  fail(ErrorCode::kInternal, "chain rule residual did not reach the requested precision");
}

PairAnalysis analyse_jacobian_pair(const BiPoly& f, const BiPoly& g, const Rational& xi,
                                   const ExpandOptions& options) {
  if (!constant_nonzero(jacobian(f, g))) fail(ErrorCode::kNotJacobianPair, "J(f, g) is not a nonzero constant");
  if (!f.has_constant_lc_y() || !g.has_constant_lc_y() || g.deg_y() < 1)
    fail(ErrorCode::kPrecondition, "f and g need constant leading coefficients in y and deg_y g > 0");
  require_generic(f, xi);
  BiPoly fx = shifted_poly(f, xi);
  require_coprime(fx, g);
  if (squarefree_parts_y(g).size() != 1) fail(ErrorCode::kNotSquarefree, "g is not squarefree");
  PairAnalysis a;
  a.f = f;
  a.g = g;
  a.xi = xi;
  a.tree = expand_joint({fx, g}, {"f_xi", "g"}, with_rigorous_limit({fx, g}, options));
  a.classes = classify_roots(a.tree);
  return a;
}

namespace {

// Distinct final pi-roots of the given kind, keyed by node id.
std::map<int, const RootInfo*> sigma_nodes(const PairAnalysis& a, RootKind kind) {
  std::map<int, const RootInfo*> out;
  for (const auto& r : a.classes.roots)
    if (r.kind == kind) out.emplace(r.sigma_node, &r);
  return out;
}

}  // namespace

MinorFormulas i_minor_formulas(const PairAnalysis& a) {
  const long m = a.f.deg_y();
  MinorFormulas out;
  out.i_fxi_fy = Rational(m - 1);
  out.i_fxi_g = 1;
  for (const auto& [id, r] : sigma_nodes(a, RootKind::kMinor)) {
    const long conj = a.tree.nodes[static_cast<std::size_t>(id)].conj;
    out.i_fxi_fy += Rational(conj * (r->D - 1)) * (r->delta_alpha - 1);
    out.i_fxi_g += Rational(conj) * (r->delta_alpha - 1);
    out.final_minor_roots += static_cast<int>(conj);
  }
  return out;
}

MajorFormula i_major_formula(const PairAnalysis& a) {
  const long m = a.f.deg_y(), n = a.g.deg_y();
  MajorFormula out;
  Rational s = 0;
  for (const auto& [id, r] : sigma_nodes(a, RootKind::kMajor)) {
    const Rational w(a.tree.nodes[static_cast<std::size_t>(id)].conj * r->D);
    out.via_lambda -= w * r->lambda_g;
    s += w * (1 - r->delta_alpha);
  }
  out.via_delta = frac(n, m + n) * s;
  return out;
}

EquivalenceReport equivalence_suite(const PairAnalysis& a) {
  BiPoly fx = shifted_poly(a.f, a.xi);
  EquivalenceReport e;
  e.field_degree_one = intersection_resultant(fx, a.g) == 1;
  e.no_minor_roots = a.classes.minor_count() == 0;
  e.derivative_count = intersection_resultant(fx, a.f.dy()) == a.f.deg_y() - 1;
  return e;
}

ExtensionBound extension_degree_bound_check(const BiPoly& f, const BiPoly& g, const Rational& xi) {
  const long m = f.deg_y(), n = g.deg_y();
  if (m <= 1 || n <= 1) fail(ErrorCode::kPrecondition, "the bound needs deg_y f > 1 and deg_y g > 1");
  ExtensionBound b;
  b.intersection = intersection_resultant(shifted_poly(f, xi), g);
  b.bound = frac(m * n, m + n);
  return b;
}

TamePair random_tame_pair(std::mt19937_64& rng, int max_deg_y, int max_maps) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const BiPoly X = BiPoly::x(), Y = BiPoly::y();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    BiPoly F = X, G = Y;
    std::vector<std::string> steps;
    const int maps = pick(1, max_maps);
    for (int i = 0; i < maps; ++i) {
      int c = pick(1, 3) * (pick(0, 1) ? 1 : -1);
      switch (pick(0, 3)) {
        case 0: {
          int e = pick(1, 3);
          F = F + G.pow(static_cast<unsigned>(e)) * Rational(c);
          steps.push_back("f += " + std::to_string(c) + "*g^" + std::to_string(e));
          break;
        }
        case 1: {
          int e = pick(1, 3);
          G = G + F.pow(static_cast<unsigned>(e)) * Rational(c);
          steps.push_back("g += " + std::to_string(c) + "*f^" + std::to_string(e));
          break;
        }
        case 2: {
          int e = pick(0, 2);
          BiPoly sub = Y + X.pow(static_cast<unsigned>(e)) * Rational(c);
          F = F.substitute(X, sub);
          G = G.substitute(X, sub);
          steps.push_back("y -> y + " + std::to_string(c) + "*x^" + std::to_string(e));
          break;
        }
        default: {
          int e = pick(2, 3);
          BiPoly sub = X + Y.pow(static_cast<unsigned>(e)) * Rational(c);
          F = F.substitute(sub, Y);
          G = G.substitute(sub, Y);
          steps.push_back("x -> x + " + std::to_string(c) + "*y^" + std::to_string(e));
          break;
        }
      }
    }
    if (pick(0, 1)) std::swap(F, G);
    auto ok = [max_deg_y](const BiPoly& p) {
      return p.deg_y() >= 1 && p.deg_y() <= max_deg_y && p.has_constant_lc_y();
    };
    if (!ok(F) || !ok(G) || F.deg_y() + G.deg_y() < 3) continue;
    TamePair t;
    t.f = F * (1 / F.coeff_y(F.deg_y()).lc());
    t.g = G * (1 / G.coeff_y(G.deg_y()).lc());
    t.steps = std::move(steps);
    if (!constant_nonzero(jacobian(t.f, t.g))) fail(ErrorCode::kInternal, "tame pair lost its Jacobian");
    return t;
  }
  fail(ErrorCode::kRetriesExhausted, "no tame pair within the degree limit");
}

bool IntersectionReport::agree() const {
  const Rational r(fxi_g_resultant), s(fxi_fy_resultant);
  if (fxi_g_root_orders != r || fxi_fy_split != s) return false;
  if (fxi_g_minor && *fxi_g_minor != r) return false;
  if (fxi_g_major && *fxi_g_major != r) return false;
  if (fxi_g_major_delta && *fxi_g_major_delta != r) return false;
  if (fxi_fy_minor && *fxi_fy_minor != s) return false;
  return true;
}

IntersectionReport intersect(const BiPoly& f, const BiPoly& g, const Rational& xi, const ExpandOptions& options) {
  IntersectionReport rep;
  rep.xi = xi;
  rep.certificate = check_generic(f, xi);
  require_generic(f, xi);
  BiPoly fx = shifted_poly(f, xi);
  rep.fxi_g_resultant = intersection_resultant(fx, g);
  rep.fxi_g_root_orders = intersection_by_root_orders(fx, g, options);
  rep.fxi_fy_resultant = f.deg_y() >= 2 ? intersection_resultant(fx, f.dy()) : 0;
  rep.fxi_fy_split = i_fxfy_split_formula(f, xi, options);
  rep.jacobian_pair = constant_nonzero(jacobian(f, g));
  if (rep.jacobian_pair && g.deg_y() >= 1) {
    PairAnalysis a = analyse_jacobian_pair(f, g, xi, options);
    MinorFormulas mf = i_minor_formulas(a);
    MajorFormula mj = i_major_formula(a);
    rep.fxi_g_minor = mf.i_fxi_g;
    rep.fxi_fy_minor = mf.i_fxi_fy;
    rep.fxi_g_major = mj.via_lambda;
    rep.fxi_g_major_delta = mj.via_delta;
    rep.minor_roots = a.classes.minor_count();
    rep.major_roots = a.classes.major_count();
  }
  return rep;
}

}  // namespace pjl
