#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "pjl/error.hpp"
#include "pjl/puiseux.hpp"

using namespace pjl;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();
const FieldPtr Q = NumberField::rationals();

FieldElement q(long v) { return FieldElement(Q, Rational(v)); }

UniPoly up(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return UniPoly::from_rational(QPoly(r));
}

ExpandOptions opts(long cutoff = 10) {
  ExpandOptions o;
  o.cutoff = cutoff;
  return o;
}

}  // namespace

TEST_CASE("t-domain substitution") {
  CHECK(to_t_domain(Y * Y - X).to_string() == "y^2 - t^(-1)");
  CHECK(to_t_domain(X * X * Y + 1).to_string() == "t^(-2)*y + 1");
  CHECK(to_t_domain(BiPoly(5)).to_string() == "5");
}

TEST_CASE("newton polygon") {
  auto e = newton_polygon(to_t_domain(Y * Y - X));
  REQUIRE(e.size() == 1);
  CHECK(e[0].slope == Rational(-1, 2));
  CHECK(e[0].length == 2);
  e = newton_polygon(to_t_domain((Y - X) * (Y - X * Rational(2))));
  REQUIRE(e.size() == 1);
  CHECK(e[0].slope == -1);
  CHECK(e[0].length == 2);
  CHECK(newton_polygon(to_t_domain(Y)).empty());
  // Two slopes: roots of order -1 and 0.
  e = newton_polygon(to_t_domain((Y - X) * (Y - 1)));
  REQUIRE(e.size() == 2);
  CHECK(e[0].slope == -1);
  CHECK(e[1].slope == 0);
}

TEST_CASE("evaluation at pi-roots") {
  TPoly F = to_t_domain(Y * Y - X);
  PiRootSpec s{{}, Rational(-1, 2)};
  auto r = eval_pi_root(F, s, 5);
  CHECK(r.front().first == -1);
  CHECK(r.front().second == up({-1, 0, 1}));

  PiRootSpec s2;
  s2.prefix.terms.emplace_back(Rational(-1, 2), q(1));
  s2.delta = Rational(1, 2);
  r = eval_pi_root(F, s2, 5);
  REQUIRE(r.size() == 2);
  CHECK(r[0].first == 0);
  CHECK(r[0].second == up({0, 2}));
  CHECK(r[1].first == 1);
  CHECK(r[1].second == up({0, 0, 1}));

  PiRootSpec s3{{}, Rational(-1)};
  r = eval_pi_root(to_t_domain(Y - X), s3, 3);
  CHECK(r.front().first == -1);
  CHECK(r.front().second == up({-1, 1}));
  CHECK_THROWS_AS(eval_pi_root(F, s, -2), Error);
}

TEST_CASE("tree of y^2 - x") {
  RootTree t = expand_root_tree(Y * Y - X, 0, opts());
  const TreeNode& root = t.root();
  CHECK(*root.delta == Rational(-1, 2));
  CHECK(root.labels[0].form == up({-1, 0, 1}));
  CHECK(root.labels[0].e == 2);
  CHECK(root.labels[0].lambda == -1);
  auto leaves = t.leaves(0);
  REQUIRE(leaves.size() == 2);
  auto a = lift_leaf(t, leaves[0], 3);
  REQUIRE(a.terms.size() == 1);
  CHECK(a.terms[0].first == Rational(-1, 2));
  CHECK(a.terms[0].second == q(-1));
  CHECK(derivative_leading_form_check(t, 0, 0));
}

TEST_CASE("tree of y: single exact leaf") {
  RootTree t = expand_root_tree(Y, 3, opts());
  auto leaves = t.leaves(0);
  REQUIRE(leaves.size() == 1);
  auto a = lift_leaf(t, leaves[0], 4);
  CHECK_FALSE(a.cutoff.has_value());
  REQUIRE(a.terms.size() == 1);
  CHECK(a.terms[0].second == q(3));
  CHECK(t.split_nodes(0).empty());
}

TEST_CASE("tree of (y - x)(y - x - 1)") {
  RootTree t = expand_root_tree((Y - X) * (Y - X - 1), 0, opts());
  auto splits = t.split_nodes(0);
  REQUIRE(splits.size() == 1);
  const TreeNode& n = t.nodes[static_cast<std::size_t>(splits[0])];
  CHECK(*n.delta == 0);
  CHECK(n.labels[0].form == up({0, -1, 1}));
  CHECK(n.labels[0].e == 2);
  // The root node is not split: a double leading root at order -1.
  CHECK(*t.root().delta == -1);
  CHECK(t.root().labels[0].e == 1);
}

TEST_CASE("cube root: conjugate class") {
  RootTree t = expand_root_tree(Y * Y * Y - X, 0, opts());
  CHECK(t.root().labels[0].e == 3);
  auto leaves = t.leaves(0);
  long total = 0;
  for (int l : leaves) total += t.nodes[static_cast<std::size_t>(l)].conj;
  CHECK(total == 3);
  CHECK(derivative_leading_form_check(t, 0, 0));
}

TEST_CASE("leaves satisfy the equation to the cutoff") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 20; ++it) {
    BiPoly f = testgen::random_monic(rng, 4, 3, 4);
    if (resultant_y(f, f.dy()).is_zero()) continue;
    RootTree t = expand_root_tree(f, 0, opts(12));
    long total = 0;
    for (int l : t.leaves(0)) {
      const TreeNode& n = t.nodes[static_cast<std::size_t>(l)];
      total += n.conj;
      auto a = lift_leaf(t, l, 6);
      long den = lcm_long(a.ramification(), n.ramification);
      Series r = eval_at_series(t.tpolys[0], a.to_series(den).truncated(6 * den), (6 + 20) * den);
      // residual order >= 6 + ord f_y(alpha)
      CHECK(r.ord_rational() >= 6 + n.labels[0].v);
    }
    CHECK(total == f.deg_y());
    for (int s : t.split_nodes(0)) CHECK(derivative_leading_form_check(t, s, 0));
  }
}

namespace {

// Terms of s strictly below `limit` (den 1).
std::vector<std::pair<long, Rational>> low_terms(const Series& s, long limit) {
  std::vector<std::pair<long, Rational>> out;
  for (const auto& [e, c] : s.terms())
    if (e < limit) out.emplace_back(e, c.rational());
  return out;
}

bool rational_leaves(const RootTree& t) {
  for (int l : t.leaves(0)) {
    const TreeNode& n = t.nodes[static_cast<std::size_t>(l)];
    if (n.conj != 1 || n.ramification != 1 || !n.field->is_rationals()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("product over rational leaves reconstructs f") {
  std::mt19937_64 rng(31);
  const long cutoff = 8;
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    BiPoly f = 1;
    if (it % 2 == 0) {
      const int m = 2 + it % 3;
      for (int i = 0; i < m; ++i) f = f * (Y - BiPoly::from_x(testgen::random_qpoly(rng, 2, 3)));
    } else {
      f = testgen::random_monic(rng, 4, 3, 3);
    }
    if (f.deg_y() < 1 || resultant_y(f, f.dy()).is_zero()) continue;
    RootTree t = expand_root_tree(f, 0, opts(cutoff));
    if (!rational_leaves(t)) continue;
    ++checked;

    Rational rho = 0;
    for (const auto& e : newton_polygon(t.tpolys[0])) rho = std::min(rho, e.slope);
    const long guard = integer_ceil(-rho * (f.deg_y() - 1)).get_si();
    const long limit = cutoff - guard;

    std::vector<Series> prod = {Series::constant(q(1))};
    for (int l : t.leaves(0)) {
      Series a = lift_leaf(t, l, cutoff).to_series(1).truncated(cutoff);
      std::vector<Series> next(prod.size() + 1, Series(1));
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] += prod[k];
        next[k] -= Series::mul(prod[k], a);
      }
      prod = next;
    }
    REQUIRE(prod.size() == t.tpolys[0].coeffs.size());
    for (std::size_t k = 0; k < prod.size(); ++k)
      CHECK(low_terms(prod[k], limit) == low_terms(t.tpolys[0].coeffs[k], limit));
  }
  CHECK(checked >= 20);
}
