#include <random>

#include "doctest.h"
#include "pjl/error.hpp"
#include "pjl/minor_split.hpp"

using namespace pjl;

namespace {

// Exhaustive enumeration of combinations, independent of the DP.
bool brute_member(long target, const std::vector<long>& gens, std::size_t from = 0) {
  if (target == 0) return true;
  if (target < 0 || from == gens.size()) return false;
  for (long k = 0; k * gens[from] <= target; ++k)
    if (brute_member(target - k * gens[from], gens, from + 1)) return true;
  return false;
}

FieldElement q(long n, long d = 1) { return FieldElement(NumberField::rationals(), frac(n, d)); }

UniPoly poly(std::initializer_list<long> c) {
  std::vector<FieldElement> v;
  for (long x : c) v.push_back(q(x));
  return UniPoly(NumberField::rationals(), v);
}

UniPoly random_poly(std::mt19937_64& rng, const FieldPtr& k, int deg) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<FieldElement> v;
  for (int i = 0; i <= deg; ++i) {
    QPoly rep({Rational(c(rng)), Rational(c(rng))});
    v.emplace_back(k, k->is_rationals() ? QPoly({Rational(c(rng))}) : rep);
  }
  if (v.back().is_zero()) v.back() = FieldElement(k, Rational(1));
  return UniPoly(k, v);
}

}  // namespace

TEST_CASE("derived d, q and M") {
  DeltaSequence a = derive_dqM({4, 6, 3});
  CHECK(a.d[1] == 4);
  CHECK(a.d[2] == 2);
  CHECK(a.d[3] == 1);
  CHECK(a.M[1] == -6);
  CHECK(a.q[2] == 9);
  CHECK(a.M[2] == 3);

  DeltaSequence b = derive_dqM({2, 1});
  CHECK(b.d[1] == 2);
  CHECK(b.d[2] == 1);
  CHECK(b.M[1] == -1);

  DeltaSequence c = derive_dqM({6, 4, 13});
  CHECK(c.M[1] == -4);
  CHECK(c.q[2] == -1);
  CHECK(c.M[2] == -5);
  CHECK(validate(c, false).ok);
  CHECK_FALSE(validate(c, true).ok);
  CHECK(validate(a, true).ok);

  CHECK_THROWS_AS(derive_dqM({4, 0, 3}), Error);
  CHECK_THROWS_AS(derive_dqM({4, 6}), Error);
  CHECK_THROWS_AS(derive_dqM({}), Error);
}

TEST_CASE("semigroup membership") {
  CHECK(semigroup_member(6, {6}));
  CHECK_FALSE(semigroup_member(2, {4, 6}));
  CHECK(semigroup_member(10, {4, 6}));
  CHECK(semigroup_member(0, {}));
  CHECK_FALSE(semigroup_member(-3, {1}));
  CHECK_FALSE(semigroup_member(5, {}));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(1, 4), gen(1, 30), target(0, 200);
  for (int i = 0; i < 300; ++i) {
    std::vector<long> g;
    for (int j = count(rng); j > 0; --j) g.push_back(gen(rng));
    long t = target(rng);
    CHECK(semigroup_member(t, g) == brute_member(t, g));
  }
}

TEST_CASE("semigroup lemma examples") {
  CHECK(semigroup_lemma_check(derive_dqM({4, 6, 3}), 2) == std::make_pair(true, true));
  CHECK(semigroup_lemma_check(derive_dqM({6, 4, 13}), 2) == std::make_pair(true, true));
  CHECK_THROWS_AS(semigroup_lemma_check(derive_dqM({2, 1}), 2), Error);
  try {
    semigroup_lemma_check(derive_dqM({4, 6, 3}), 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIndexOutOfRange);
  }
}

TEST_CASE("semigroup lemma on generated sequences") {
  std::mt19937_64 rng(29);
  auto corpus = generate_delta_sequences(rng, 150, 4, 200);
  REQUIRE(corpus.size() == 150);
  for (const auto& s : corpus) {
    CAPTURE(s.delta.size());
    REQUIRE(validate(s, true).ok);
    for (long v : s.delta) CHECK(v <= 200);
    for (int k = 2; k <= s.h(); ++k) CHECK(semigroup_lemma_check(s, k) == std::make_pair(true, true));
  }
}

TEST_CASE("strict validation is needed for the lemma") {
  // Descending d and q >= 1 hold, but 2 * 21 is not in <24, 54>.
  DeltaSequence s = derive_dqM({24, 54, 46, 21});
  CHECK_FALSE(validate(s, true).ok);
  CHECK_FALSE(semigroup_lemma_check(s, 3).second);
}

TEST_CASE("operator D") {
  UniPoly pi = poly({0, 1});
  CHECK(wronskian_d(1, 1, pi, pi).is_zero());
  CHECK(wronskian_d(1, 1, pi, pi.pow(2)) == pi.pow(2));
  CHECK(wronskian_d(2, 2, pi.pow(2), pi.pow(3)) == pi.pow(4) * q(2));

  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    UniPoly p = random_poly(rng, NumberField::rationals(), 3);
    UniPoly r = random_poly(rng, NumberField::rationals(), 3);
    UniPoly s = random_poly(rng, NumberField::rationals(), 2);
    CHECK(wronskian_d(3, 3, p, p).is_zero());
    CHECK(wronskian_d(2, 5, p + r, s) == wronskian_d(2, 5, p, s) + wronskian_d(2, 5, r, s));
    CHECK(wronskian_d(2, 5, s, p + r) == wronskian_d(2, 5, s, p) + wronskian_d(2, 5, s, r));
  }
}

TEST_CASE("special ODE examples") {
  UniPoly pi = poly({0, 1});
  OdeSolution a = solve_special_ode(pi, 2, q(1), 1);
  CHECK(a.q == pi.pow(2));
  CHECK(a.a.is_zero());
  CHECK(a.kernel_dimension == 1);

  UniPoly p = poly({-1, 0, 1});
  OdeSolution b = solve_special_ode(p, 2, q(2), 2);
  CHECK(wronskian_d(2, 2, p, b.q) == p.pow(2) * q(2));
  CHECK(b.q == UniPoly::linear_root(b.a) * p);

  OdeSolution c = solve_special_ode(pi, 3, q(3), 1);
  CHECK(wronskian_d(1, 2, pi, c.q) == pi.pow(3) * q(3));
  CHECK(c.q == UniPoly::linear_root(c.a) * pi.pow(2) * q(3));

  CHECK_THROWS_AS(solve_special_ode(pi, 1, q(1), 1), Error);
  CHECK_THROWS_AS(solve_special_ode(pi, 2, q(0), 1), Error);
  CHECK_THROWS_AS(solve_special_ode(p, 2, q(1), 1), Error);
}

TEST_CASE("special ODE over number fields") {
  std::mt19937_64 rng(37);
  FieldPtr sqrt2 = NumberField::make(QPoly({Rational(-2), Rational(0), Rational(1)}), {});
  for (const FieldPtr& k : {NumberField::rationals(), sqrt2}) {
    for (int m = 1; m <= 4; ++m) {
      for (int l = 2; l <= 4; ++l) {
        UniPoly p = random_poly(rng, k, m);
        FieldElement c(k, QPoly({Rational(l), Rational(1)}));
        OdeSolution s = solve_special_ode(p, l, c, m);
        CHECK(s.kernel_dimension == 1);
        CHECK(wronskian_d(m, static_cast<long>(m) * (l - 1), p, s.q) == p.pow(static_cast<unsigned>(l)) * c);
        CHECK(s.q == UniPoly::linear_root(s.a) * p.pow(static_cast<unsigned>(l - 1)) *
                         (c * FieldElement(k, Rational(m)).inverse()));
      }
    }
  }
}

TEST_CASE("obstruction matches the scaled lemma") {
  MuSequence mu;
  mu.degrees = {4, 6, 3};
  mu.n = 4;
  mu.m = 6;
  mu.u_s = 1;
  mu.v_s = 1;
  CHECK(obstruction_check(mu));

  std::mt19937_64 rng(41);
  auto corpus = generate_delta_sequences(rng, 60, 4, 120);
  std::uniform_int_distribution<long> scale(1, 4);
  for (const auto& s : corpus) {
    long g = scale(rng);
    MuSequence m;
    for (long v : s.delta) m.degrees.push_back(v * g);
    m.n = m.degrees[0];
    m.m = m.degrees[1];
    m.u_s = 1;
    m.v_s = m.d(m.s()) - 1;
    CHECK(obstruction_check(m) == semigroup_lemma_check(s, s.h()).second);
    CHECK(obstruction_check(m));
  }

  MuSequence bad;
  bad.degrees = {6, 4, 13};
  bad.n = 6;
  bad.u_s = 1;
  bad.v_s = 1;
  CHECK_THROWS_AS(obstruction_check(bad), Error);
}
