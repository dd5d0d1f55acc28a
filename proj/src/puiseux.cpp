#include "pjl/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pjl/error.hpp"

namespace pjl {

namespace {

const FieldPtr& rationals() {
  static const FieldPtr q = NumberField::rationals();
  return q;
}

long den_of(const Rational& r) {
  if (!r.get_den().fits_slong_p()) fail(ErrorCode::kInternal, "ramification index out of range");
  return r.get_den().get_si();
}

long ceil_units(const Rational& r, long den) {
  Integer c = integer_ceil(r * den);
  if (!c.fits_slong_p()) fail(ErrorCode::kInternal, "order out of range");
  return c.get_si();
}

// Needed precision for the y1^i coefficient with s Horner steps remaining.
long horner_limit(const std::vector<long>& targets, int i, int s, long ordP) {
  const int kmax = static_cast<int>(targets.size()) - 1;
  long best = LONG_MIN;
  for (int ip = i; ip <= std::min(kmax, i + s); ++ip) {
    if (targets[static_cast<std::size_t>(ip)] >= kExact) return kExact;
    long need = targets[static_cast<std::size_t>(ip)] - static_cast<long>(s - (ip - i)) * ordP;
    best = std::max(best, need);
  }
  return best;
}

// Coefficients g_0..g_kmax of F(P + y1), each known below targets[i].
std::vector<Series> shifted_coeffs(const TPoly& F, const Series& P, int kmax, const std::vector<long>& targets) {
  const long den = P.den();
  const int m = F.degree();
  if (P.known_zero()) {
    std::vector<Series> g;
    for (int i = 0; i <= kmax; ++i)
      g.push_back(i <= m ? F.coeffs[static_cast<std::size_t>(i)].rescaled(den).truncated(targets[static_cast<std::size_t>(i)])
                         : Series(den));
    return g;
  }
  const long ordP = P.ord();
  std::vector<Series> H(static_cast<std::size_t>(kmax) + 1, Series(den));
  for (int j = m; j >= 0; --j) {
    std::vector<Series> N(static_cast<std::size_t>(kmax) + 1, Series(den));
    for (int i = 0; i <= kmax; ++i) {
      long L = horner_limit(targets, i, j, ordP);
      const auto ui = static_cast<std::size_t>(i);
      Series acc = Series::mul(H[ui], P, L);
      if (i > 0) acc += H[ui - 1].truncated(L);
      if (i == 0) acc += F.coeffs[static_cast<std::size_t>(j)].rescaled(den).truncated(L);
      N[ui] = std::move(acc);
    }
    H = std::move(N);
  }
  return H;
}

Series prefix_series(const TruncatedPuiseux& p, long den) { return p.to_series(den); }

}  // namespace

// ---------------------------------------------------------------------------

TPoly TPoly::dy() const {
  TPoly r;
  for (std::size_t j = 1; j < coeffs.size(); ++j)
    r.coeffs.push_back(coeffs[j].scaled(FieldElement(rationals(), Rational(static_cast<long>(j)))));
  return r;
}

std::string TPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    for (const auto& [e, c] : coeffs[j].terms()) {
      Rational v = c.rational();
      os << (first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "));
      first = false;
      std::string mono;
      Rational ex = coeffs[j].exponent(e);
      if (ex != 0) mono = "t^" + (ex < 0 ? "(" + pjl::to_string(ex) + ")" : pjl::to_string(ex));
      if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
      Rational mag = abs(v);
      if (mono.empty())
        os << pjl::to_string(mag);
      else if (mag == 1)
        os << mono;
      else
        os << pjl::to_string(mag) << "*" << mono;
    }
  }
  return first ? "0" : os.str();
}

TPoly to_t_domain(const BiPoly& f) {
  TPoly F;
  for (const auto& q : f.y_coeffs()) {
    std::vector<Series::Term> terms;
    for (std::size_t i = 0; i < q.coeffs().size(); ++i)
      if (q.coeffs()[i] != 0) terms.emplace_back(-static_cast<long>(i), FieldElement(rationals(), q.coeffs()[i]));
    F.coeffs.emplace_back(1, std::move(terms));
  }
  return F;
}

std::vector<NewtonEdge> newton_polygon(const TPoly& F) {
  std::vector<std::pair<int, Rational>> pts;
  for (int j = 0; j <= F.degree(); ++j) {
    const Series& c = F.coeffs[static_cast<std::size_t>(j)];
    if (!c.known_zero()) pts.emplace_back(j, c.ord_rational());
  }
  std::vector<NewtonEdge> edges;
  if (pts.size() < 2) return edges;
  // From the rightmost point walk left, taking the smallest root order each
  // time; on ties the farthest point closes the edge.
  std::size_t cur = pts.size() - 1;
  while (cur > 0) {
    std::optional<Rational> best;
    std::size_t best_i = cur;
    for (std::size_t i = 0; i < cur; ++i) {
      Rational slope = (pts[i].second - pts[cur].second) / (pts[cur].first - pts[i].first);
      if (!best || slope < *best) {
        best = slope;
        best_i = i;
      }
    }
    edges.push_back({*best, pts[cur].first - pts[best_i].first});
    cur = best_i;
  }
  return edges;
}

Series TruncatedPuiseux::to_series(long den) const {
  std::vector<Series::Term> t;
  for (const auto& [e, c] : terms) t.emplace_back(to_units(e, den), c);
  long prec = cutoff ? ceil_units(*cutoff, den) : kExact;
  return Series(den, std::move(t), prec);
}

long TruncatedPuiseux::ramification() const {
  long d = 1;
  for (const auto& [e, c] : terms) d = lcm_long(d, den_of(e));
  return d;
}

TruncatedPuiseux TruncatedPuiseux::from_series(const Series& s, const FieldPtr& field) {
  TruncatedPuiseux p;
  p.field = field;
  for (const auto& [e, c] : s.terms()) p.terms.emplace_back(s.exponent(e), c);
  if (!s.exact()) p.cutoff = s.exponent(s.prec());
  return p;
}

Series eval_at_series(const TPoly& F, const Series& a, long target) {
  const long den = a.den();
  const long orda = a.known_zero() ? 0 : a.ord();
  Series H(den);
  for (int j = F.degree(); j >= 0; --j) {
    // H is multiplied by a another j times.
    long limit = target >= kExact ? kExact : target - static_cast<long>(j) * orda;
    if (a.known_zero() && a.exact()) limit = target;
    H = Series::mul(H, a, limit) + F.coeffs[static_cast<std::size_t>(j)].rescaled(den).truncated(limit);
  }
  return H.truncated(target);
}

std::vector<std::pair<Rational, UniPoly>> eval_pi_root(const TPoly& F, const PiRootSpec& sigma,
                                                     const Rational& cutoff) {
  const FieldPtr& K = sigma.prefix.field;
  long den = lcm_long(sigma.prefix.ramification(), den_of(sigma.delta));
  for (const auto& [e, c] : sigma.prefix.terms)
    if (e >= sigma.delta) fail(ErrorCode::kInvalidArgument, "pi-root prefix exponent not below delta");
  const int m = F.degree();
  std::vector<long> targets;
  for (int i = 0; i <= m; ++i) targets.push_back(ceil_units(cutoff - sigma.delta * i, den));
  Series P = prefix_series(sigma.prefix, den);
  std::vector<Series> g = shifted_coeffs(F, P, m, targets);
  std::map<Rational, std::vector<FieldElement>> acc;
  for (int i = 0; i <= m; ++i) {
    for (const auto& [e, c] : g[static_cast<std::size_t>(i)].terms()) {
      Rational ex = frac(e, den) + sigma.delta * i;
      if (ex >= cutoff) continue;
      auto& v = acc[ex];
      if (v.size() <= static_cast<std::size_t>(i)) v.resize(static_cast<std::size_t>(i) + 1, FieldElement(K, Rational(0)));
      v[static_cast<std::size_t>(i)] += c;
    }
  }
  std::vector<std::pair<Rational, UniPoly>> out;
  for (auto& [ex, v] : acc) {
    UniPoly p(K, v);
    if (!p.is_zero()) out.emplace_back(ex, std::move(p));
  }
  if (out.empty()) fail(ErrorCode::kCutoffTooSmall, "no nonzero term of F(sigma) below the cutoff; raise the cutoff");
  return out;
}

// ---------------------------------------------------------------------------

int TreeNode::total_count() const {
  int t = 0;
  for (const auto& l : labels) t += l.count;
  return t;
}

std::vector<int> RootTree::leaves(int label) const {
  std::vector<int> out;
  for (const auto& n : nodes)
    if (n.kind == NodeKind::kLeaf && n.leaf_label == label) out.push_back(n.id);
  return out;
}

Rational RootTree::order_at_leaf(int leaf, int label) const {
  return nodes.at(static_cast<std::size_t>(leaf)).labels.at(static_cast<std::size_t>(label)).v;
}

std::vector<int> RootTree::path(int node) const {
  std::vector<int> p;
  for (int n = node; n >= 0; n = nodes.at(static_cast<std::size_t>(n)).parent) p.push_back(n);
  std::reverse(p.begin(), p.end());
  return p;
}

PiRootSpec RootTree::pi_root(int node) const {
  const TreeNode& n = nodes.at(static_cast<std::size_t>(node));
  if (!n.delta) fail(ErrorCode::kInvalidArgument, "node has no split order");
  return {n.prefix, *n.delta};
}

std::vector<int> RootTree::split_nodes(int label) const {
  std::vector<int> out;
  for (const auto& n : nodes)
    if (n.kind != NodeKind::kLeaf && n.labels[static_cast<std::size_t>(label)].e >= 2) out.push_back(n.id);
  return out;
}

Rational default_cutoff(const BiPoly& f) {
  const int m = f.deg_y();
  if (m < 1) return 2;
  Rational slope = 0;
  for (int j = 0; j < m; ++j) {
    int dx = f.coeff_y(j).degree();
    if (dx > 0) slope = std::max(slope, frac(dx, m - j));
  }
  return Rational(2 * m) * (1 + slope);
}

namespace {

struct State {
  FieldPtr K = NumberField::rationals();
  TruncatedPuiseux prefix;
  long den = 1;
  std::optional<Rational> last;
  std::vector<int> counts;
  std::vector<Rational> v;
  long conj = 1;
  int parent = -1;
};

struct LabelNewton {
  std::optional<Rational> delta;  // resolved split order of this label (nullopt: beyond search)
  bool exact_root = false;        // cluster equals the prefix exactly
  std::vector<Series> g;
  long vk = 0;
};

class Expander {
 public:
  explicit Expander(RootTree& t) : tree_(t) {
    limit_ = t.options.separation_limit ? *t.options.separation_limit : t.options.cutoff;
  }

  void run() {
    State s;
    const std::size_t L = tree_.tpolys.size();
    for (std::size_t h = 0; h < L; ++h) {
      s.counts.push_back(tree_.tpolys[h].degree());
      s.v.emplace_back(0);
    }
    process(std::move(s), true);
  }

 private:
  RootTree& tree_;
  Rational limit_;
  int generator_counter_ = 0;

  int add_node(TreeNode n) {
    n.id = static_cast<int>(tree_.nodes.size());
    if (n.parent >= 0) tree_.nodes[static_cast<std::size_t>(n.parent)].children.push_back(n.id);
    tree_.nodes.push_back(std::move(n));
    return tree_.nodes.back().id;
  }

  void make_leaf(const State& s) {
    TreeNode n;
    n.parent = s.parent;
    n.kind = NodeKind::kLeaf;
    n.field = s.K;
    n.prefix = s.prefix;
    n.prefix.field = s.K;
    n.conj = s.conj;
    n.ramification = s.den;
    n.separation = s.last ? *s.last : Rational(0);
    for (std::size_t h = 0; h < s.counts.size(); ++h) {
      LabelData d;
      d.count = s.counts[h];
      d.v = s.v[h];
      d.lambda = s.v[h];
      if (d.count == 1) n.leaf_label = static_cast<int>(h);
      n.labels.push_back(std::move(d));
    }
    add_node(std::move(n));
  }

  // Newton data for label h at the state's prefix with search bound D (units).
  LabelNewton analyse(const State& s, std::size_t h, long D, bool root) {
    const TPoly& F = tree_.tpolys[h];
    const int k = s.counts[h];
    LabelNewton r;
    r.vk = to_units(s.v[h], s.den);
    std::vector<long> targets(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) targets[static_cast<std::size_t>(i)] = root ? kExact : r.vk + static_cast<long>(k - i) * D;
    targets[static_cast<std::size_t>(k)] = root ? kExact : r.vk + 1;
    Series P = prefix_series(s.prefix, s.den);
    r.g = shifted_coeffs(F, P, k, targets);
    const Series& gk = r.g[static_cast<std::size_t>(k)];
    if (gk.known_zero() || gk.ord() != r.vk)
      fail(ErrorCode::kInternal, "order bookkeeping mismatch in the root tree");
    bool all_exact_zero = true;
    std::optional<Rational> best;
    for (int i = 0; i < k; ++i) {
      const Series& gi = r.g[static_cast<std::size_t>(i)];
      if (!(gi.known_zero() && gi.exact())) all_exact_zero = false;
      if (gi.known_zero()) continue;
      Rational ratio = frac(gi.ord() - r.vk, static_cast<long>(k - i) * s.den);
      if (!best || ratio < *best) best = ratio;
    }
    r.delta = best;
    r.exact_root = all_exact_zero;
    return r;
  }

  void process(State s, bool is_root) {
    for (;;) {
      const int total = std::accumulate(s.counts.begin(), s.counts.end(), 0);
      if (!is_root && total == 1) {
        make_leaf(s);
        return;
      }
      const std::size_t L = s.counts.size();
      std::vector<LabelNewton> data(L);
      std::optional<Rational> delta;
      if (is_root) {
        for (std::size_t h = 0; h < L; ++h) {
          if (s.counts[h] == 0) continue;
          data[h] = analyse(s, h, 0, true);
          if (data[h].delta && (!delta || *data[h].delta < *delta)) delta = data[h].delta;
        }
      } else {
        const long last_units = to_units(*s.last, s.den);
        long step = s.den;
        for (;;) {
          long D = last_units + step;
          bool all_exact = true;
          for (std::size_t h = 0; h < L; ++h) {
            if (s.counts[h] == 0) continue;
            data[h] = analyse(s, h, D, false);
            if (data[h].delta && (!delta || *data[h].delta < *delta)) delta = data[h].delta;
            if (!data[h].exact_root) all_exact = false;
          }
          if (delta || all_exact) break;
          if (frac(D, s.den) > limit_)
            fail(ErrorCode::kNotSeparated,
                 "roots not separated below order " + to_string(limit_) + "; raise the cutoff");
          step *= 2;
        }
      }
      if (!delta) {
        if (total != 1) fail(ErrorCode::kNotSquarefree, "repeated root: polynomial is not squarefree");
        // Single exact root at the root level.
        TreeNode n;
        n.kind = NodeKind::kRoot;
        n.field = s.K;
        n.ramification = s.den;
        for (std::size_t h = 0; h < L; ++h) {
          LabelData d;
          d.count = s.counts[h];
          d.v = s.v[h];
          d.lambda = s.v[h];
          n.labels.push_back(std::move(d));
        }
        s.parent = add_node(std::move(n));
        make_leaf(s);
        return;
      }

      // Leading forms at sigma = P + pi t^delta.
      std::vector<LabelData> labels(L);
      const FieldElement one(s.K, Rational(1));
      for (std::size_t h = 0; h < L; ++h) {
        LabelData& d = labels[h];
        d.count = s.counts[h];
        d.v = s.v[h];
        d.lambda = s.v[h] + *delta * d.count;
        if (d.count == 0) continue;
        const LabelNewton& nd = data[h];
        const int k = d.count;
        std::vector<FieldElement> c(static_cast<std::size_t>(k) + 1, FieldElement(s.K, Rational(0)));
        c[static_cast<std::size_t>(k)] = nd.g[static_cast<std::size_t>(k)].leading();
        if (nd.delta && *nd.delta == *delta) {
          for (int i = 0; i < k; ++i) {
            const Series& gi = nd.g[static_cast<std::size_t>(i)];
            if (gi.known_zero()) continue;
            if (frac(gi.ord() - nd.vk, static_cast<long>(k - i) * s.den) == *delta)
              c[static_cast<std::size_t>(i)] = gi.leading();
          }
        }
        d.form = UniPoly(s.K, c);
        d.e = squarefree_and_distinct_roots(d.form).e;
      }

      // Group the irreducible factors of all forms.
      struct Group {
        UniPoly factor;
        std::vector<int> mult;
      };
      std::vector<Group> groups;
      for (std::size_t h = 0; h < L; ++h) {
        if (labels[h].count == 0) continue;
        for (const auto& f : factor_over_tower(labels[h].form)) {
          auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.factor == f.factor; });
          if (it == groups.end()) {
            groups.push_back({f.factor, std::vector<int>(L, 0)});
            it = groups.end() - 1;
          }
          it->mult[h] += f.multiplicity;
        }
      }
      std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.to_string() < b.factor.to_string();
      });
      int joint_e = 0;
      for (const auto& g : groups) joint_e += static_cast<int>(g.factor.degree());

      const long child_den = lcm_long(s.den, den_of(*delta));
      const bool unsplit = joint_e == 1;
      if (unsplit && !is_root) {
        FieldElement c = -groups[0].factor.coeff(0);
        if (c.is_zero()) fail(ErrorCode::kInternal, "unsplit cluster with zero coefficient");
        s.prefix.terms.emplace_back(*delta, c);
        s.last = delta;
        s.den = child_den;
        continue;
      }

      TreeNode n;
      n.parent = s.parent;
      n.kind = is_root ? NodeKind::kRoot : NodeKind::kSplit;
      n.field = s.K;
      n.prefix = s.prefix;
      n.prefix.field = s.K;
      n.delta = delta;
      n.conj = s.conj;
      n.ramification = child_den;
      n.labels = labels;
      n.joint_e = joint_e;
      const int id = add_node(std::move(n));

      for (const auto& g : groups) {
        State c;
        c.parent = id;
        c.last = delta;
        c.den = child_den;
        c.counts = g.mult;
        for (std::size_t h = 0; h < L; ++h) c.v.push_back(s.v[h] + *delta * (s.counts[h] - g.mult[h]));
        FieldElement root;
        if (g.factor.degree() == 1) {
          c.K = s.K;
          c.prefix = s.prefix;
          c.conj = s.conj;
          root = -g.factor.coeff(0);
        } else {
          Extension ext =
              adjoin_root(g.factor, tree_.options.ext_budget, "a" + std::to_string(++generator_counter_));
          c.K = ext.field;
          c.conj = s.conj * g.factor.degree();
          for (const auto& [e, v] : s.prefix.terms) c.prefix.terms.emplace_back(e, ext.embed.apply(v));
          root = ext.root;
        }
        c.prefix.field = c.K;
        if (!root.is_zero()) c.prefix.terms.emplace_back(*delta, root);
        process(std::move(c), false);
      }
      return;
    }
  }
};

}  // namespace

RootTree expand_joint(const std::vector<BiPoly>& polys, const std::vector<std::string>& names,
                      const ExpandOptions& options) {
  if (polys.empty()) fail(ErrorCode::kInvalidArgument, "expand_joint needs at least one polynomial");
  if (options.cutoff <= 0) fail(ErrorCode::kInvalidArgument, "cutoff must be positive");
  RootTree t;
  t.options = options;
  t.label_names = names;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const BiPoly& p = polys[i];
    if (p.deg_y() < 1 || !p.has_constant_lc_y())
      fail(ErrorCode::kPrecondition, "polynomial must have positive degree in y and constant leading coefficient");
    BiPoly monic = p * (1 / p.coeff_y(p.deg_y()).lc());
    t.polys.push_back(monic);
    t.tpolys.push_back(to_t_domain(monic));
    if (t.label_names.size() <= i) t.label_names.push_back("h" + std::to_string(i));
  }
  Expander(t).run();
  return t;
}

RootTree expand_root_tree(const BiPoly& f, const Rational& xi, const ExpandOptions& options) {
  if (!f.is_monic_y()) fail(ErrorCode::kPrecondition, "f must be monic in y");
  return expand_joint({f - BiPoly(xi)}, {"f"}, options);
}

TruncatedPuiseux lift_leaf(const RootTree& tree, int leaf, const Rational& order) {
  const TreeNode& n = tree.nodes.at(static_cast<std::size_t>(leaf));
  if (n.kind != NodeKind::kLeaf) fail(ErrorCode::kInvalidArgument, "lift_leaf needs a leaf node");
  const TPoly& F = tree.tpolys[static_cast<std::size_t>(n.leaf_label)];
  const TPoly Fy = F.dy();
  const long den = n.ramification;
  const long v1 = to_units(n.labels[static_cast<std::size_t>(n.leaf_label)].v, den);
  const long C = ceil_units(order, den);
  Series alpha = n.prefix.to_series(den);
  alpha = alpha.truncated(C);
  for (int iter = 0; iter < 200; ++iter) {
    const long B = v1 + C;
    Series Fa = eval_at_series(F, alpha, B);
    if (Fa.known_zero()) {
      TruncatedPuiseux out = TruncatedPuiseux::from_series(alpha, n.field);
      if (!Fa.exact() || !alpha.exact()) out.cutoff = order;
      return out;
    }
    Series Fya = eval_at_series(Fy, alpha, B);
    if (Fya.known_zero() || Fya.ord() != v1) fail(ErrorCode::kInternal, "derivative order mismatch while lifting a root");
    Series q = Series::div(Fa, Fya, C);
    Series next = alpha - q;
    std::vector<Series::Term> terms;
    for (const auto& t : next.terms())
      if (t.first < C) terms.push_back(t);
    alpha = Series(den, std::move(terms));
  }
  fail(ErrorCode::kInternal, "root lifting did not converge");
}

bool derivative_leading_form_check(const RootTree& tree, int node, int label) {
  const TreeNode& n = tree.nodes.at(static_cast<std::size_t>(node));
  if (!n.delta) return false;
  const LabelData& d = n.labels.at(static_cast<std::size_t>(label));
  if (d.count < 1) return false;
  const Rational expected = d.lambda - *n.delta;
  try {
    auto lead = eval_pi_root(tree.tpolys[static_cast<std::size_t>(label)].dy(), tree.pi_root(node), expected + 1);
    return lead.front().first == expected && lead.front().second == d.form.derivative();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCutoffTooSmall) return false;
    throw;
  }
}

int RootClassification::minor_count() const {
  int c = 0;
  for (const auto& r : roots)
    if (r.kind == RootKind::kMinor) c += static_cast<int>(r.conj);
  return c;
}

int RootClassification::major_count() const {
  int c = 0;
  for (const auto& r : roots)
    if (r.kind == RootKind::kMajor) c += static_cast<int>(r.conj);
  return c;
}

RootClassification classify_roots(const RootTree& tree) {
  if (tree.tpolys.size() < 2) fail(ErrorCode::kInvalidArgument, "classification needs a joint tree of f and g");
  const int m = tree.tpolys[0].degree();
  RootClassification out;
  for (int leaf : tree.leaves(0)) {
    const TreeNode& n = tree.nodes[static_cast<std::size_t>(leaf)];
    RootInfo r;
    r.leaf = leaf;
    r.conj = n.conj;
    r.ord_g = n.labels[1].v;
    r.kind = r.ord_g < 0 ? RootKind::kMajor : (r.ord_g == 0 ? RootKind::kMinor : RootKind::kOther);
    int star = -1;
    for (int id : tree.path(leaf))
      if (id != leaf && tree.nodes[static_cast<std::size_t>(id)].labels[1].count >= 1) star = id;
    if (star < 0) fail(ErrorCode::kInternal, "no ancestor shares the cluster with a root of g");
    const TreeNode& s = tree.nodes[static_cast<std::size_t>(star)];
    r.sigma_node = star;
    r.delta_alpha = *s.delta;
    r.D = s.labels[0].count;
    r.lambda_g = s.labels[1].lambda;
    if (r.lambda_g != r.ord_g) fail(ErrorCode::kInternal, "order of g at sigma_alpha disagrees with ord g(alpha)");
    // A linear leading form counts as final only when f itself is linear in y.
    r.sigma_final = s.labels[0].e == s.labels[0].count && (s.labels[0].count > 1 || m == 1);
    out.roots.push_back(r);
  }
  return out;
}

bool minor_disc_check(const RootTree& tree, const RootClassification& c, int node) {
  for (const auto& r : c.roots) {
    auto p = tree.path(r.leaf);
    if (std::find(p.begin(), p.end(), node) == p.end()) continue;
    if (r.kind != RootKind::kMinor) return false;
  }
  return true;
}

}  // namespace pjl
