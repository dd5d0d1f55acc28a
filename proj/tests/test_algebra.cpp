#include <algorithm>
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "pjl/bipoly.hpp"
#include "pjl/error.hpp"
#include "pjl/factor_q.hpp"
#include "pjl/unipoly.hpp"

using namespace pjl;

namespace {

QPoly qp(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QPoly(r);
}

// Determinant over Q by Gaussian elimination.
Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return d;
}

// Sylvester determinant of f, g (in y) specialised at x = x0, f rows first.
Rational sylvester_at(const BiPoly& f, const BiPoly& g, const Rational& x0) {
  const int m = f.deg_y(), n = g.deg_y();
  std::vector<Rational> fc, gc;
  for (int j = m; j >= 0; --j) fc.push_back(f.coeff_y(j).eval(x0));
  for (int j = n; j >= 0; --j) gc.push_back(g.coeff_y(j).eval(x0));
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = fc[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = gc[static_cast<std::size_t>(k)];
  return det(s);
}

// Degree in y of gcd(f, g) over Q(x), by a primitive pseudo-remainder sequence.
int gcd_degree_over_qx(const BiPoly& f, const BiPoly& g) {
  std::vector<QPoly> a = f.y_coeffs(), b = g.y_coeffs();
  auto primitive = [](std::vector<QPoly> v) {
    QPoly c;
    for (const auto& x : v) c = gcd(c, x);
    for (auto& x : v) x = x.exact_div(c);
    return v;
  };
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<QPoly> r = a;
    while (r.size() >= b.size()) {
      QPoly lr = r.back();
      std::size_t shift = r.size() - b.size();
      for (auto& c : r) c *= b.back();
      for (std::size_t j = 0; j < b.size(); ++j) r[j + shift] -= lr * b[j];
      while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    a = std::move(b);
    b = r.empty() ? r : primitive(r);
  }
  return static_cast<int>(a.size()) - 1;
}

UniPoly product(const std::vector<Factor>& fs, const FieldPtr& k) {
  UniPoly r = UniPoly::constant(FieldElement(k, Rational(1)));
  for (const auto& f : fs) r = r * f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

}  // namespace

TEST_CASE("gcd examples") {
  UniPoly a = UniPoly::from_rational(qp({-1, 0, 1}));
  UniPoly b = UniPoly::from_rational(qp({-1, 1}));
  CHECK(poly_gcd(a, b) == b);
  CHECK(poly_gcd(a * FieldElement(NumberField::rationals(), Rational(3)), UniPoly()) == a);
  // (pi-1)^2 (pi+2) and (pi-1)(pi+3)
  UniPoly c = UniPoly::from_rational(qp({-1, 1}).pow(2) * qp({2, 1}));
  UniPoly d = UniPoly::from_rational(qp({-1, 1}) * qp({3, 1}));
  CHECK(poly_gcd(c, d) == b);
}

TEST_CASE("gcd divides both inputs and is monic") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    QPoly common = testgen::random_qpoly(rng, 2, 4);
    QPoly a = testgen::random_qpoly(rng, 4, 5) * common;
    QPoly b = testgen::random_qpoly(rng, 4, 5) * common;
    UniPoly g = poly_gcd(UniPoly::from_rational(a), UniPoly::from_rational(b));
    if (a.is_zero() && b.is_zero()) continue;
    CHECK(g.lc() == FieldElement(NumberField::rationals(), Rational(1)));
    if (!a.is_zero()) CHECK((a % g.to_rational()).is_zero());
    if (!b.is_zero()) CHECK((b % g.to_rational()).is_zero());
    if (!common.is_zero()) CHECK((g.to_rational() % common.monic()).is_zero());
  }
}

TEST_CASE("distinct root counts") {
  auto info = squarefree_and_distinct_roots(UniPoly::from_rational(qp({0, 0, 0, 1})));
  CHECK(info.e == 1);
  CHECK(info.squarefree_part.to_rational() == qp({0, 1}));
  info = squarefree_and_distinct_roots(UniPoly::from_rational(qp({-1, 0, 1}).pow(2)));
  CHECK(info.e == 2);
  CHECK(info.squarefree_part.to_rational() == qp({-1, 0, 1}));
  info = squarefree_and_distinct_roots(UniPoly::from_rational(qp({0, 0, 0, 1, -2, 1})));
  CHECK(info.e == 2);
  CHECK(info.squarefree_part.to_rational() == qp({0, -1, 1}));
  CHECK_THROWS_AS(squarefree_and_distinct_roots(UniPoly()), Error);
}

TEST_CASE("resultant examples and sign convention") {
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  CHECK(resultant_y(y - x, y) == QPoly::x());
  CHECK(resultant_y(y * y - x, y) == -QPoly::x());
  CHECK(resultant_y(y * y - x, y - 1) == qp({1, -1}));
  BiPoly f = y * y * y - x * y + 1;
  CHECK(resultant_y(f, f).is_zero());
  CHECK_THROWS_AS(resultant_y(x, x + 1), Error);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 60; ++it) {
    BiPoly f = testgen::random_monic(rng, 4, 3, 3);
    BiPoly g = testgen::random_monic(rng, 4, 3, 3);
    QPoly r = resultant_y(f, g);
    // deg_x r <= 2 * 4 * 3, so 30 sample points decide equality.
    for (long x0 = -15; x0 < 15; ++x0) REQUIRE(r.eval(x0) == sylvester_at(f, g, x0));
  }
}

TEST_CASE("resultant vanishes iff there is a common factor") {
  std::mt19937_64 rng(7);
  int zero = 0, nonzero = 0;
  for (int it = 0; it < 80; ++it) {
    BiPoly f = testgen::random_monic(rng, 2, 2, 3);
    BiPoly g = testgen::random_monic(rng, 2, 2, 3);
    bool shared = it % 2 == 0;
    BiPoly h = testgen::random_monic(rng, 2, 2, 3);
    if (shared) {
      f = f * h;
      g = g * h;
    }
    bool res_zero = resultant_y(f, g).is_zero();
    CHECK(res_zero == (gcd_degree_over_qx(f, g) > 0));
    (res_zero ? zero : nonzero)++;
  }
  CHECK(zero > 0);
  CHECK(nonzero > 0);
}

TEST_CASE("factorization over Q") {
  auto fs = factor_rational(qp({-1, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor == qp({-1, 1}));
  CHECK(fs[1].factor == qp({1, 1}));
  fs = factor_rational(qp({-2, 0, 1}));
  REQUIRE(fs.size() == 1);
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 splits modulo every prime.
  fs = factor_rational(qp({1, 0, -10, 0, 1}));
  CHECK(fs.size() == 1);
  // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
  fs = factor_rational(qp({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(fs.size() == 4);
}

TEST_CASE("factorization multiplies back") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 60; ++it) {
    QPoly p = testgen::random_qpoly(rng, 3, 6, true) * testgen::random_qpoly(rng, 3, 6, true) *
              testgen::random_qpoly(rng, 2, 3, true);
    if (p.degree() < 1) continue;
    auto fs = factor_rational(p);
    QPoly back(1);
    for (const auto& f : fs) back *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
    CHECK(back == p.monic());
    for (const auto& f : fs) {
      // Irreducibility cross-check for low degree: no rational roots for degree 2 or 3.
      if (f.factor.degree() == 2 || f.factor.degree() == 3) {
        auto z = f.factor.primitive_integer();
        Integer a0 = abs(z.front()), an = abs(z.back());
        for (Integer num = 1; num <= a0 && a0 != 0; ++num) {
          if (a0 % num != 0) continue;
          for (Integer den = 1; den <= an; ++den) {
            if (an % den != 0) continue;
            Rational r(num, den);
            r.canonicalize();
            CHECK(f.factor.eval(r) != 0);
            CHECK(f.factor.eval(-r) != 0);
          }
        }
      }
    }
  }
}

TEST_CASE("factor over a tower") {
  FieldPtr q = NumberField::rationals();
  UniPoly p = UniPoly::from_rational(qp({-2, 0, 1}));
  auto fs = factor_over_tower(p);
  REQUIRE(fs.size() == 1);
  Extension ext = adjoin_root(p, kDefaultExtensionBudget, "r");
  CHECK(ext.field->degree() == 2);
  CHECK(p.map(ext.embed).eval(ext.root).is_zero());
  fs = factor_over_tower(p.map(ext.embed));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor.degree() == 1);
  CHECK(product(fs, ext.field) == p.map(ext.embed));

  UniPoly r = UniPoly::from_rational(qp({-2, 0, 1}).pow(2) * qp({-3, 1}));
  fs = factor_over_tower(r);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor.to_rational() == qp({-3, 1}));
  CHECK(fs[0].multiplicity == 1);
  CHECK(fs[1].factor.to_rational() == qp({-2, 0, 1}));
  CHECK(fs[1].multiplicity == 2);
  CHECK(product(fs, q) == r);
}

TEST_CASE("towers: second extension and splitting of x^4 - 2") {
  UniPoly p = UniPoly::from_rational(qp({-2, 0, 0, 0, 1}));
  Extension e1 = adjoin_root(p, kDefaultExtensionBudget, "a");
  auto fs = factor_over_tower(p.map(e1.embed));
  // x^4 - 2 over Q(2^(1/4)): (x - a)(x + a)(x^2 + a^2)
  REQUIRE(fs.size() == 3);
  const UniPoly& quad = fs[2].factor;
  REQUIRE(quad.degree() == 2);
  Extension e2 = adjoin_root(quad, kDefaultExtensionBudget, "b");
  CHECK(e2.field->degree() == 8);
  CHECK(quad.map(e2.embed).eval(e2.root).is_zero());
  CHECK(p.map(e1.embed).map(e2.embed).eval(e2.embed.apply(e1.root)).is_zero());
  auto split = factor_over_tower(p.map(e1.embed).map(e2.embed));
  CHECK(split.size() == 4);
  CHECK(e2.field->steps().size() == 2);
  CHECK_THROWS_AS(adjoin_root(quad, 7, "b"), Error);
}

TEST_CASE("distinct-root count matches full splitting") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 25; ++it) {
    QPoly a = testgen::random_qpoly(rng, 2, 3, true), b = testgen::random_qpoly(rng, 2, 3, true);
    QPoly p = a * a * b;
    if (p.degree() < 1 || p.degree() > 6) continue;
    UniPoly u = UniPoly::from_rational(p);
    int e = squarefree_and_distinct_roots(u).e;
    // Split completely by adjoining roots of the nonlinear factors one at a time.
    int guard = 0;
    for (;;) {
      auto fs = factor_over_tower(u);
      auto it2 = std::find_if(fs.begin(), fs.end(), [](const Factor& f) { return f.factor.degree() > 1; });
      if (it2 == fs.end()) {
        CHECK(static_cast<int>(fs.size()) == e);
        break;
      }
      Extension ext = adjoin_root(it2->factor, 1000, "g");
      u = u.map(ext.embed);
      REQUIRE(++guard < 6);
    }
  }
}
