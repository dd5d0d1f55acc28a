#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "pjl/error.hpp"
#include "pjl/io.hpp"

using namespace pjl;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

std::size_t syntax_offset(const std::string& text) {
  try {
    parse_poly(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parser examples") {
  CHECK(parse_poly("y^2 - x") == Y * Y - X);
  CHECK(parse_poly("(y - x)*(y - x - 1)") == (Y - X) * (Y - X - BiPoly(1)));
  CHECK(parse_poly("3/2*x*y^2 + -y") == X * Y * Y * frac(3, 2) - Y);
  CHECK(parse_poly("x/4") == X * frac(1, 4));
  CHECK(parse_poly("-(x+1)^3") == -(X + BiPoly(1)).pow(3));
  CHECK(parse_poly("  0 ").is_zero());
  CHECK(syntax_offset("y^2 -") == 5);
  CHECK(syntax_offset("y^") == 2);
  CHECK(syntax_offset("2y") == 1);
  CHECK(syntax_offset("(x + y") == 6);
  CHECK(syntax_offset("x / y") == 4);
  CHECK(syntax_offset("x / 0") == 4);
  CHECK(syntax_offset("z") == 0);
  CHECK(syntax_offset("") == 0);
}

TEST_CASE("parse and print are a fixed point") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    BiPoly f = testgen::random_monic(rng, 5, 4, 7) * frac(static_cast<long>(i % 7) - 3, static_cast<long>(i % 5) + 1);
    const std::string s = f.to_string();
    BiPoly g = parse_poly(s);
    CHECK(g == f);
    CHECK(g.to_string() == s);
  }
}

TEST_CASE("tree json round trip") {
  std::mt19937_64 rng(73);
  std::vector<BiPoly> polys = {Y * Y - X, Y.pow(3) - X * X * Y + BiPoly(1), Y.pow(4) - X.pow(3)};
  for (int i = 0; i < 12; ++i) polys.push_back(testgen::random_monic(rng, 4, 3, 3));
  for (const BiPoly& f : polys) {
    ExpandOptions o;
    o.cutoff = default_cutoff(f);
    RootTree a = expand_root_tree(f, 7, o);
    Json j = tree_to_json(a);
    RootTree b = tree_from_json(Json::parse(j.dump()));
    CHECK(tree_to_json(b) == j);
    CHECK(split_formula(b, 0) == split_formula(a, 0));
    REQUIRE(b.nodes.size() == a.nodes.size());
    for (int leaf : a.leaves(0)) {
      CHECK(b.order_at_leaf(leaf, 0) == a.order_at_leaf(leaf, 0));
      CHECK(lift_leaf(b, leaf, 4).terms.size() == lift_leaf(a, leaf, 4).terms.size());
    }
  }

  // A joint tree keeps its classification.
  BiPoly f = X + Y * Y, g = Y + (X + Y * Y).pow(2);
  PairAnalysis pa = analyse_jacobian_pair(f, g, 3, ExpandOptions{});
  RootTree t = tree_from_json(Json::parse(tree_to_json(pa.tree).dump()));
  CHECK(classification_json(t, classify_roots(t)) == classification_json(pa.tree, pa.classes));
}

TEST_CASE("rational and case json") {
  CHECK(rational_json(frac(-3, 6)) == "-1/2");
  CHECK(rational_from_json(Json("4/6")) == frac(2, 3));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), Error);

  for (const auto& c : builtin_cases()) {
    MohCaseData d = case_from_json(Json::parse(case_json(c).dump()));
    CHECK(case_json(d) == case_json(c));
    CHECK(verdict_json(analyze(d, true)) == verdict_json(analyze(c, true)));
  }
  Json partial = {{"n", 99}, {"m", 66}, {"delta2", "1/3"}, {"delta1", "4/9"}, {"sigma2_roots", 48},
                  {"major_final_size", 16}, {"principal_minor", 18}, {"u_s", 3}};
  CHECK(analyze(case_from_json(partial), false).patterns.size() == 14);
  partial["delta1"] = "1/9";
  CHECK_THROWS_AS(case_from_json(partial), Error);
  CHECK_THROWS_AS(case_from_json(Json::object()), Error);
}

TEST_CASE("delta sequence json") {
  Json j = delta_sequence_json(derive_dqM({4, 6, 3}), true);
  CHECK(j["d"] == Json({4, 2, 1}));
  CHECK(j["q"] == Json({9}));
  CHECK(j["M"] == Json({-6, 3}));
  CHECK(j["valid"] == true);
  CHECK(j["lemma"][0]["in_part"] == true);
  CHECK(j["lemma"][0]["notin_part"] == true);
}
