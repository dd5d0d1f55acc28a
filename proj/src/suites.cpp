#include "pjl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "pjl/caselab.hpp"
#include "pjl/error.hpp"
#include "pjl/minor_split.hpp"

namespace pjl {

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) {
      ++r_.passed;
    } else if (r_.failures.size() < kMaxReportedFailures) {
      r_.failures.push_back(what);
    }
  }

 private:
  SuiteResult& r_;
};

std::string pair_text(const BiPoly& f, const BiPoly& g) { return "(" + f.to_string() + ", " + g.to_string() + ")"; }

// Exhaustive enumeration of nonnegative combinations, independent of the DP.
bool brute_member(long target, const std::vector<long>& gens, std::size_t from = 0) {
  if (target == 0) return true;
  if (target < 0 || from == gens.size()) return false;
  for (long k = 0; k * gens[from] <= target; ++k)
    if (brute_member(target - k * gens[from], gens, from + 1)) return true;
  return false;
}

bool checked_member(long target, const std::vector<long>& gens, bool& oracle_ok) {
  const bool dp = semigroup_member(target, gens);
  if (dp != brute_member(target, gens)) oracle_ok = false;
  return dp;
}

void split_formula_suite(SuiteResult& r, std::uint64_t seed, int count, const ExpandOptions& o) {
  Tally t(r);
  int i = 0;
  for (const BiPoly& f : split_suite_polys(seed, count)) {
    const Rational xi = pick_generic_xi(f, seed + static_cast<std::uint64_t>(i++)).xi;
    const long expected = intersection_resultant(f - BiPoly(xi), f.dy());
    const Rational got = i_fxfy_split_formula(f, xi, o);
    t.check(got == expected, f.to_string() + " xi=" + to_string(xi) + ": split " + to_string(got) +
                                 " vs resultant " + std::to_string(expected));
  }
}

void root_partition_suite(SuiteResult& r, std::uint64_t seed, int count, const ExpandOptions& o) {
  Tally t(r);
  int i = 0;
  for (const BiPoly& f : split_suite_polys(seed, count)) {
    const Rational xi = pick_generic_xi(f, seed + static_cast<std::uint64_t>(i++)).xi;
    RootPartition p = root_partition_check(f, xi, o);
    t.check(p.equal && static_cast<long>(p.at_derivative_roots.size()) == f.deg_y() - 1,
            f.to_string() + " xi=" + to_string(xi));
  }
}

void route_agreement_suite(SuiteResult& r, std::uint64_t seed, int count, const ExpandOptions& o) {
  Tally t(r);
  std::mt19937_64 rng(seed);
  while (r.cases < count) {
    BiPoly f = random_monic_poly(rng, 4, 4), g = random_monic_poly(rng, 4, 4);
    if (resultant_y(f, g).is_zero()) continue;
    const long a = intersection_resultant(f, g);
    const Rational b = intersection_by_root_orders(f, g, o);
    t.check(a == b, pair_text(f, g) + ": resultant " + std::to_string(a) + " vs root orders " + to_string(b));
  }
}

void jacobian_suite(SuiteResult& r, std::uint64_t seed, int count, const ExpandOptions& o) {
  Tally t(r);
  for (const TamePair& p : tame_suite_pairs(seed, count)) {
    const Rational xi = pick_generic_xi(p.f, seed).xi;
    PairAnalysis a = analyse_jacobian_pair(p.f, p.g, xi, o);
    EquivalenceReport e = equivalence_suite(a);
    MajorFormula mj = i_major_formula(a);
    MinorFormulas mn = i_minor_formulas(a);
    bool ok = e.field_degree_one && e.no_minor_roots && e.derivative_count && mj.via_lambda == 1 && mj.agree() &&
              mn.i_fxi_g == 1 && mn.i_fxi_fy == p.f.deg_y() - 1 &&
              intersection_resultant(p.f - BiPoly(xi), p.g) == 1;
    for (const auto& root : a.classes.roots) ok = ok && root.kind == RootKind::kMajor && root.delta_alpha < 1;
    t.check(ok, pair_text(p.f, p.g));
  }
}

void chain_rule_suite(SuiteResult& r, std::uint64_t seed, int count, const ExpandOptions& o) {
  Tally t(r);
  const Rational cutoff = 10;
  long min_roots = -1;
  for (const TamePair& p : tame_suite_pairs(seed, count)) {
    const Rational xi = pick_generic_xi(p.f, seed).xi;
    PairAnalysis a = analyse_jacobian_pair(p.f, p.g, xi, o);
    // Leaves of f - xi and g, cheapest lift first; a representative stands for
    // its conjugates. Stops once three roots are covered.
    std::vector<int> leaves = a.tree.leaves(0);
    for (int leaf : a.tree.leaves(1)) leaves.push_back(leaf);
    auto cost = [&a](int leaf) {
      const TreeNode& n = a.tree.nodes[static_cast<std::size_t>(leaf)];
      return static_cast<long>(n.field->degree()) * n.ramification;
    };
    std::stable_sort(leaves.begin(), leaves.end(), [&](int x, int y) { return cost(x) < cost(y); });
    long roots = 0;
    bool ok = true;
    for (int leaf : leaves) {
      if (roots >= 3) break;
      ChainRuleCheck c = chain_rule_residual(p.f, p.g, lift_leaf(a.tree, leaf, cutoff), cutoff);
      ok = ok && c.vanishes && c.known_below >= cutoff;
      roots += a.tree.nodes[static_cast<std::size_t>(leaf)].conj;
    }
    min_roots = min_roots < 0 ? roots : std::min(min_roots, roots);
    t.check(ok && roots >= 3, pair_text(p.f, p.g) + " roots=" + std::to_string(roots));
  }
  r.summary = "fewest roots checked on a pair: " + std::to_string(min_roots);
}

void extension_bound_suite(SuiteResult& r, std::uint64_t seed, int count, const ExpandOptions&) {
  Tally t(r);
  int skipped = 0;
  for (const TamePair& p : tame_suite_pairs(seed, count)) {
    if (p.f.deg_y() <= 1 || p.g.deg_y() <= 1) {
      ++skipped;
      continue;
    }
    ExtensionBound b = extension_degree_bound_check(p.f, p.g, pick_generic_xi(p.f, seed).xi);
    t.check(b.holds(), pair_text(p.f, p.g) + ": I=" + std::to_string(b.intersection) +
                           " bound=" + to_string(b.bound) + " m=" + std::to_string(p.f.deg_y()) +
                           " n=" + std::to_string(p.g.deg_y()));
  }
  r.summary = std::to_string(skipped) + " pairs with m = 1 or n = 1 skipped";
}

void case75_suite(SuiteResult& r) {
  Tally t(r);
  CaseVerdict v = analyze(find_case("75x50"), true);
  t.check(v.patterns.size() == 2, "two subcases");
  if (v.patterns.size() != 2) return;
  t.check(v.patterns[0].i_minor == 4 && v.patterns[0].i_major == 8, "subcase (i) gives (4, 8)");
  t.check(v.patterns[1].i_minor == 6 && v.patterns[1].i_major == 4, "subcase (ii) gives (6, 4)");
  t.check(v.patterns[0].contradiction && v.patterns[1].contradiction, "both contradictory");
  t.check(v.survivors.empty(), "no survivors");
}

void case99_suite(SuiteResult& r) {
  Tally t(r);
  const MohCaseData c = find_case("99x66");
  CaseVerdict v = analyze(c, false);
  bool major16 = !v.patterns.empty();
  int c83 = 0, c6 = 0;
  for (const auto& p : v.patterns) {
    major16 = major16 && p.i_major == 16;
    if (p.i_minor == frac(8, 3)) c83 += p.contradiction ? 1 : 0;
    if (p.i_minor == 6) c6 += p.contradiction ? 1 : 0;
  }
  t.check(major16, "major route 16 on every pattern");
  t.check(c83 == 1 && c6 == 1, "candidates 8/3 and 6 rejected");
  bool unique = v.arithmetic_survivors.size() == 1;
  if (unique) {
    const auto& s = v.patterns[v.arithmetic_survivors[0]];
    unique = s.i_minor == 16 && s.pattern.principal_split && *s.pattern.principal_split == 1 &&
             s.pattern.principal_parts == std::vector<long>{6, 6, 6};
  }
  t.check(unique, "order-1 triple split is the unique arithmetic survivor");
  CaseVerdict w = analyze(c, true);
  t.check(w.survivors.empty(), "no survivors with the obstruction");
  r.summary = std::to_string(v.patterns.size()) + " patterns enumerated";
}

void semigroup_lemma_suite(SuiteResult& r, std::uint64_t seed, int count) {
  Tally t(r);
  std::mt19937_64 rng(seed);
  for (const DeltaSequence& s : generate_delta_sequences(rng, count, 4, 200)) {
    bool oracle_ok = true, lemma_ok = validate(s, true).ok;
    for (int k = 2; k <= s.h(); ++k) {
      const auto u = static_cast<std::size_t>(k);
      const long target = s.delta[u] + s.M[u];
      std::vector<long> tail(s.delta.begin() + 1, s.delta.begin() + k);
      std::vector<long> head(s.delta.begin(), s.delta.begin() + k);
      const bool in = checked_member(target, tail, oracle_ok);
      const bool notin = !checked_member(target - s.delta[0], head, oracle_ok);
      lemma_ok = lemma_ok && in && notin && semigroup_lemma_check(s, k) == std::make_pair(in, notin);
    }
    std::ostringstream os;
    for (long d : s.delta) os << d << ' ';
    t.check(oracle_ok && lemma_ok, "delta = " + os.str());
  }
}

void special_ode_suite(SuiteResult& r, std::uint64_t seed, int count) {
  Tally t(r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-6, 6);
  const FieldPtr sqrt2 = NumberField::make(QPoly({Rational(-2), Rational(0), Rational(1)}), {});
  const int reps = count > 0 ? count : 1;
  for (int rep = 0; rep < reps; ++rep) {
    for (const FieldPtr& k : {NumberField::rationals(), sqrt2}) {
      for (int m = 1; m <= 4; ++m) {
        for (int l = 2; l <= 4; ++l) {
          auto element = [&] {
            std::vector<Rational> c{Rational(coeff(rng))};
            if (!k->is_rationals()) c.push_back(Rational(coeff(rng)));
            return FieldElement(k, QPoly(c));
          };
          std::vector<FieldElement> pc;
          for (int i = 0; i <= m; ++i) pc.push_back(element());
          if (pc.back().is_zero()) pc.back() = FieldElement(k, Rational(1));
          FieldElement c = element();
          if (c.is_zero()) c = FieldElement(k, Rational(1));
          UniPoly p(k, pc);
          OdeSolution s = solve_special_ode(p, l, c, m);
          const UniPoly expected_q =
              UniPoly::linear_root(s.a) * p.pow(static_cast<unsigned>(l - 1)) * (c / FieldElement(k, Rational(m)));
          const bool ok = wronskian_d(m, static_cast<long>(m) * (l - 1), p, s.q) == p.pow(static_cast<unsigned>(l)) * c &&
                          s.q == expected_q && s.kernel_dimension == 1;
          t.check(ok, "p = " + p.to_string() + " l=" + std::to_string(l));
        }
      }
    }
  }
}

using Runner = std::function<void(SuiteResult&, std::uint64_t, int, const ExpandOptions&)>;

const std::map<std::string, std::pair<int, Runner>>& registry() {
  static const std::map<std::string, std::pair<int, Runner>> r = {
      {"split-formula", {100, split_formula_suite}},
      {"root-partition", {100, root_partition_suite}},
      {"route-agreement", {100, route_agreement_suite}},
      {"jacobian-pairs", {30, jacobian_suite}},
      {"chain-rule", {30, chain_rule_suite}},
      {"extension-bound", {30, extension_bound_suite}},
      {"case-75x50", {1, [](SuiteResult& s, std::uint64_t, int, const ExpandOptions&) { case75_suite(s); }}},
      {"case-99x66", {1, [](SuiteResult& s, std::uint64_t, int, const ExpandOptions&) { case99_suite(s); }}},
      {"semigroup-lemma", {40, [](SuiteResult& s, std::uint64_t seed, int n, const ExpandOptions&) {
         semigroup_lemma_suite(s, seed, n);
       }}},
      {"special-ode", {3, [](SuiteResult& s, std::uint64_t seed, int n, const ExpandOptions&) {
         special_ode_suite(s, seed, n);
       }}},
  };
  return r;
}

}  // namespace

BiPoly random_monic_poly(std::mt19937_64& rng, int max_y, int max_x) {
  std::uniform_int_distribution<int> dy(2, max_y), dx(0, max_x), c(-3, 3), keep(0, 2);
  const int m = dy(rng);
  BiPoly f = BiPoly::monomial(1, 0, m);
  for (int j = 0; j < m; ++j) {
    const int top = dx(rng);
    for (int i = 0; i <= top; ++i)
      if (keep(rng) != 0) f += BiPoly::monomial(c(rng), i, j);
  }
  return f;
}

std::vector<BiPoly> split_suite_polys(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<BiPoly> out;
  while (static_cast<int>(out.size()) < count) {
    out.push_back(random_monic_poly(rng, 5, 4));
  }
  return out;
}

std::vector<TamePair> tame_suite_pairs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<TamePair> out;
  for (int i = 0; i < count; ++i) out.push_back(random_tame_pair(rng));
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count, const ExpandOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorCode::kNotFound, "unknown suite " + name);
  SuiteResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  it->second.second(r, seed, count > 0 ? count : it->second.first, options);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace pjl
