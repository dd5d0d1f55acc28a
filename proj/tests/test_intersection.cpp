#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "pjl/error.hpp"
#include "pjl/intersection.hpp"

using namespace pjl;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

ExpandOptions opts() { return ExpandOptions{}; }

// deg_x of f(x, p(x)), an independent count for I(f, y - p).
long degree_on_graph(const BiPoly& f, const BiPoly& p) {
  BiPoly s = f.substitute(X, p);
  return s.is_zero() ? -1 : s.deg_x();
}

BiPoly product(const std::vector<BiPoly>& parts) {
  BiPoly r(1);
  for (std::size_t i = 0; i < parts.size(); ++i) r = r * parts[i].pow(static_cast<unsigned>(i + 1));
  return r;
}

}  // namespace

TEST_CASE("bivariate squarefree parts") {
  auto p = squarefree_parts_y((Y - X).pow(2) * (Y + 1));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == Y + 1);
  CHECK(p[1] == Y - X);
  p = squarefree_parts_y((Y * Y - X) * Rational(3));
  REQUIRE(p.size() == 1);
  CHECK(p[0] == Y * Y - X);
  CHECK(squarefree_parts_y((Y * Y).pow(1) * Rational(3)).size() == 2);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    BiPoly a = testgen::random_monic(rng, 2, 2, 3), b = testgen::random_monic(rng, 2, 2, 3);
    BiPoly f = a * b * b;
    auto parts = squarefree_parts_y(f);
    CHECK(product(parts) == f);
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (parts[j].deg_y() > 0) CHECK(gcd_y(parts[j], parts[j].dy()).deg_y() == 0);
  }
}

TEST_CASE("generic shift certificate") {
  BiPoly f = Y.pow(3) - Y * Rational(3);
  CHECK_FALSE(check_generic(f, 2).accepted());
  CHECK_FALSE(check_generic(f, -2).accepted());
  CHECK(check_generic(f, 0).accepted());
  CHECK_FALSE(check_generic(Y * Y, 0).accepted());
  for (long xi : {-3L, 0L, 1L, 5L}) CHECK(check_generic(Y * Y - X, xi).accepted());

  auto a = pick_generic_xi(Y * Y, 11), b = pick_generic_xi(Y * Y, 11);
  CHECK(a.xi == b.xi);
  CHECK(a.certificate.accepted());
  CHECK(a.xi != 0);
}

TEST_CASE("intersection examples") {
  CHECK(intersection_resultant(Y * Y - X, Y * Y - X * Rational(4)) == 2);
  CHECK(intersection_by_root_orders(Y * Y - X, Y * Y - X * Rational(4), opts()) == 2);
  CHECK(i_fxfy_split_formula(Y * Y - X, 0, opts()) == 1);
  CHECK(i_fxfy_split_formula(Y * Y - X, 7, opts()) == 1);
  CHECK_THROWS_AS(intersection_resultant(Y - X, (Y - X) * (Y + 1)), Error);

  IntersectionReport r = intersect(X + Y * Y, Y, 3, opts());
  CHECK(r.jacobian_pair);
  CHECK(r.fxi_g_resultant == 1);
  CHECK(r.fxi_g_root_orders == 1);
  CHECK(*r.fxi_g_minor == 1);
  CHECK(*r.fxi_g_major == 1);
  CHECK(*r.fxi_g_major_delta == 1);
  CHECK(r.fxi_fy_split == 1);
  CHECK(r.agree());

  IntersectionReport s = intersect(Y * Y - X, Y * Y - X * Rational(4), 5, opts());
  CHECK_FALSE(s.jacobian_pair);
  CHECK(s.fxi_g_resultant == 2);
  CHECK(s.fxi_g_root_orders == 2);
  CHECK(s.agree());
}

TEST_CASE("root orders against graphs of polynomials") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    BiPoly f = testgen::random_monic(rng, 4, 3, 4);
    BiPoly p = BiPoly::from_x(testgen::random_qpoly(rng, 3, 4));
    long d = degree_on_graph(f, p);
    if (d < 0) continue;
    CHECK(intersection_by_root_orders(f, Y - p, opts()) == d);
  }
}

TEST_CASE("repeated roots are weighted") {
  BiPoly g = (Y - X).pow(2) * (Y + 1);
  BiPoly f = Y * Y - X;
  CHECK(intersection_by_root_orders(f, g, opts()) == intersection_resultant(f, g));
  CHECK(intersection_by_root_orders(g, f, opts()) == intersection_resultant(g, f));
  // f_y = 3y^2 has a double root.
  RootPartition p = root_partition_check(Y.pow(3) + X, 1, opts());
  CHECK(p.equal);
  CHECK(p.at_derivative_roots.size() == 2);
}

TEST_CASE("route agreement on random pairs") {
  std::mt19937_64 rng(101);
  int compared = 0;
  for (int i = 0; i < 60; ++i) {
    BiPoly f = testgen::random_monic(rng, 3, 3, 4), g = testgen::random_monic(rng, 3, 3, 4);
    if (resultant_y(f, g).is_zero()) continue;
    CHECK(intersection_by_root_orders(f, g, opts()) == intersection_resultant(f, g));
    ++compared;
  }
  CHECK(compared >= 50);
}

TEST_CASE("split formula and root partition on random polynomials") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 40; ++i) {
    BiPoly f = testgen::random_monic(rng, 4, 3, 4);
    if (f.deg_y() < 2) continue;
    Rational xi = pick_generic_xi(f, static_cast<std::uint64_t>(i)).xi;
    long expected = intersection_resultant(f - BiPoly(xi), f.dy());
    CHECK(i_fxfy_split_formula(f, xi, opts()) == expected);
    RootPartition p = root_partition_check(f, xi, opts());
    CHECK(p.equal);
    CHECK(static_cast<long>(p.at_derivative_roots.size()) == f.deg_y() - 1);
  }
}

TEST_CASE("separation bound covers every split order") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 30; ++i) {
    BiPoly f = testgen::random_monic(rng, 4, 3, 4);
    if (squarefree_parts_y(f).size() != 1) continue;
    Rational b = separation_bound({f});
    RootTree t = expand_root_tree(f, 0, with_rigorous_limit({f}, opts()));
    for (const auto& n : t.nodes) {
      if (n.delta) CHECK(*n.delta <= b);
      if (n.kind == NodeKind::kLeaf) CHECK(n.separation <= b);
    }
  }
}

TEST_CASE("tame pairs") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 20; ++i) {
    TamePair t = random_tame_pair(rng);
    CAPTURE(t.f.to_string("x", "y"));
    CAPTURE(t.g.to_string("x", "y"));
    BiPoly j = jacobian(t.f, t.g);
    REQUIRE(j.is_constant());
    REQUIRE_FALSE(j.is_zero());
    CHECK(t.f.is_monic_y());
    CHECK(t.g.is_monic_y());
    CHECK(t.f.deg_y() <= 12);
    CHECK(t.g.deg_y() <= 12);

    Rational xi = pick_generic_xi(t.f, 9).xi;
    PairAnalysis a = analyse_jacobian_pair(t.f, t.g, xi, opts());
    EquivalenceReport e = equivalence_suite(a);
    CHECK(e.field_degree_one);
    CHECK(e.no_minor_roots);
    CHECK(e.derivative_count);
    MajorFormula mj = i_major_formula(a);
    CHECK(mj.via_lambda == 1);
    CHECK(mj.agree());
    MinorFormulas mn = i_minor_formulas(a);
    CHECK(mn.i_fxi_g == 1);
    CHECK(mn.i_fxi_fy == t.f.deg_y() - 1);
    for (const auto& r : a.classes.roots) {
      CHECK(r.kind == RootKind::kMajor);
      CHECK(r.delta_alpha < 1);
      // A linear leading form of f is possible at sigma_alpha.
      CHECK((r.sigma_final || r.D == 1));
    }
  }
}

TEST_CASE("non-Jacobian pairs are rejected") {
  CHECK_THROWS_AS(analyse_jacobian_pair(Y * Y - X, Y * Y - X * Rational(4), 1, opts()), Error);
  try {
    analyse_jacobian_pair(Y * Y - X, Y * Y - X * Rational(4), 1, opts());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotJacobianPair);
  }
}

TEST_CASE("chain rule residual vanishes") {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 6; ++i) {
    TamePair t = random_tame_pair(rng);
    Rational xi = pick_generic_xi(t.f, 1).xi;
    RootTree tree = expand_root_tree(t.f, xi, opts());
    for (int leaf : tree.leaves(0)) {
      TruncatedPuiseux a = lift_leaf(tree, leaf, 10);
      ChainRuleCheck c = chain_rule_residual(t.f, t.g, a, 10);
      CHECK(c.vanishes);
      CHECK(c.known_below >= 10);
    }
  }
  // The identity holds for any series, not only roots.
  TruncatedPuiseux s;
  s.terms = {{Rational(-3, 2), FieldElement(NumberField::rationals(), Rational(2))},
             {Rational(1, 2), FieldElement(NumberField::rationals(), Rational(-5))}};
  ChainRuleCheck c = chain_rule_residual(X + Y * Y, Y + (X + Y * Y).pow(2), s, 10);
  CHECK(c.vanishes);
  CHECK(chain_rule_residual(Y * Y - X, Y.pow(3) + X * Y, s, 10).vanishes);
}

TEST_CASE("extension degree bound") {
  CHECK_THROWS_AS(extension_degree_bound_check(X + Y * Y, Y, 1), Error);
  ExtensionBound b = extension_degree_bound_check(X + Y * Y, Y + (X + Y * Y).pow(2), 1);
  CHECK(b.intersection == 1);
  CHECK(b.bound == Rational(4, 3));
  CHECK(b.holds());
  // Both degrees 2: the bound is 1 and the intersection is 1.
  ExtensionBound e = extension_degree_bound_check(X + Y * Y, X + Y * Y + Y, 1);
  CHECK(e.intersection == 1);
  CHECK(e.bound == 1);
  CHECK_FALSE(e.holds());
}
