#include <algorithm>
#include <random>

#include "doctest.h"
#include "pjl/caselab.hpp"
#include "pjl/error.hpp"

using namespace pjl;

namespace {

long f_total(const SplitPattern& p) {
  long t = 0;
  for (const auto& b : p.branches) t += b.f_mult * b.conj;
  return t;
}

const PatternVerdict* by_blocks(const CaseVerdict& v, std::vector<long> blocks) {
  for (const auto& p : v.patterns)
    if (p.pattern.sigma2_blocks == blocks) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("built-in case data") {
  MohCaseData a = find_case("75x50");
  CHECK(a.delta2 == frac(1, 5));
  CHECK(a.delta1 == frac(2, 3));
  CHECK(a.V3 == 4);
  CHECK(a.V2 == 2);
  CHECK(a.M2 == 55);
  CHECK(a.M3 == 73);
  MohCaseData b = find_case("(99, 66)");
  CHECK(b.delta2 == frac(1, 3));
  CHECK(b.delta1 == frac(4, 9));
  CHECK(b.V3 == 8);
  CHECK(b.V2 == 8);
  CHECK(b.M2 == 77);
  CHECK(b.M3 == 97);
  CHECK(*b.d_s - b.u_s == 8);
  CHECK_THROWS_AS(find_case("64x48"), Error);
  CHECK_THROWS_AS(find_case("84x56"), Error);
  for (const auto& c : builtin_cases()) CHECK_NOTHROW(validate_case(c));

  MohCaseData bad = a;
  bad.delta1 = frac(1, 6);
  CHECK_THROWS_AS(validate_case(bad), Error);
}

TEST_CASE("case 75x50") {
  CaseVerdict v = analyze(find_case("75x50"), true);
  REQUIRE(v.patterns.size() == 2);
  CHECK(v.patterns[0].pattern.sigma2_blocks == std::vector<long>{4, 4});
  CHECK(v.patterns[1].pattern.sigma2_blocks == std::vector<long>{4, 2, 2});
  CHECK(v.patterns[0].i_minor == 4);
  CHECK(v.patterns[0].i_major == 8);
  CHECK(v.patterns[1].i_minor == 6);
  CHECK(v.patterns[1].i_major == 4);
  CHECK(v.patterns[0].contradiction);
  CHECK(v.patterns[1].contradiction);
  CHECK(v.survivors.empty());

  // Minor blocks of subcase (ii) end at order 6/5, g-multiplicity 3.
  int minor_blocks = 0;
  for (const auto& b : v.patterns[1].pattern.branches) {
    if (b.kind == BranchKind::kMinor && b.f_mult == 2) {
      ++minor_blocks;
      CHECK(b.delta == frac(6, 5));
      CHECK(b.g_mult == 3);
      CHECK(b.conj == 5);
    }
  }
  CHECK(minor_blocks == 2);
  CHECK(by_blocks(v, {2, 2, 2, 2}) == nullptr);
}

TEST_CASE("case 99x66") {
  MohCaseData c = find_case("99x66");
  CaseVerdict v = analyze(c, false);
  CHECK(v.patterns.size() == 14);
  for (const auto& p : v.patterns) {
    CHECK(p.pattern.sigma2_blocks == std::vector<long>{16});
    CHECK(p.i_major == 16);
  }
  const auto& major = v.patterns.front().pattern.branches.front();
  CHECK(major.kind == BranchKind::kMajor);
  CHECK(major.f_mult == 16);
  CHECK(major.g_mult == 24);
  CHECK(major.conj == 3);

  std::vector<Rational> minors;
  for (const auto& p : v.patterns) minors.push_back(p.i_minor);
  CHECK(std::count(minors.begin(), minors.end(), frac(8, 3)) == 1);
  CHECK(std::count(minors.begin(), minors.end(), Rational(6)) == 1);

  REQUIRE(v.arithmetic_survivors.size() == 1);
  const SplitPattern& s = v.patterns[v.arithmetic_survivors[0]].pattern;
  CHECK(*s.principal_split == 1);
  CHECK(s.principal_parts == std::vector<long>{6, 6, 6});
  for (const auto& b : s.branches) {
    if (b.kind != BranchKind::kMinor) continue;
    CHECK(b.f_mult == 6);
    CHECK(b.g_mult == 9);
    CHECK(b.delta == 6);
  }
  CHECK(v.survivors.size() == 1);

  CaseVerdict w = analyze(c, true);
  CHECK(w.survivors.empty());
  CHECK(w.arithmetic_survivors.size() == 1);
  // Every value above the major route comes from an order-1 split.
  for (const auto& p : w.patterns)
    if (p.i_minor > 16) CHECK(p.obstructed);
}

TEST_CASE("pattern invariants") {
  for (const auto& c : builtin_cases()) {
    for (const auto& p : enumerate_patterns(c)) {
      CHECK(f_total(p) == c.m);
      for (const auto& b : p.branches) CHECK(b.f_mult * c.n == b.g_mult * c.m);
    }
  }
  // A first subcase of (75,50) entered as user data: principal minor roots allowed to split.
  MohCaseData u = find_case("75x50");
  u.principal_may_split = true;
  for (const auto& p : enumerate_patterns(u)) CHECK(f_total(p) == u.m);
}

TEST_CASE("routes are independent of branch order") {
  std::mt19937_64 rng(61);
  for (const auto& c : builtin_cases()) {
    for (auto p : enumerate_patterns(c)) {
      Rational a = eval_minor_route(p), b = eval_major_route(p, c.n, c.m);
      for (int i = 0; i < 4; ++i) {
        std::shuffle(p.branches.begin(), p.branches.end(), rng);
        CHECK(eval_minor_route(p) == a);
        CHECK(eval_major_route(p, c.n, c.m) == b);
      }
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  MohCaseData c = find_case("99x66");
  auto a = enumerate_patterns(c), b = enumerate_patterns(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].descriptor == b[i].descriptor);
}
