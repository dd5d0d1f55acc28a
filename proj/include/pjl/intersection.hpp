#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pjl/bipoly.hpp"
#include "pjl/puiseux.hpp"

namespace pjl {

/// deg_x Res_y(f, g). Both need a constant leading coefficient in y.
long intersection_resultant(const BiPoly& f, const BiPoly& g);

/// Search bound covering every split order of the joint tree of `polys`,
/// derived from the smallest root order and the total degree.
Rational separation_bound(const std::vector<BiPoly>& polys);

/// Options whose separation limit is at least separation_bound(polys).
ExpandOptions with_rigorous_limit(const std::vector<BiPoly>& polys, ExpandOptions options);

/// Joint tree of the squarefree parts of several polynomials. parts[i] lists
/// (label, multiplicity) for input i.
struct WeightedTree {
  RootTree tree;
  std::vector<std::vector<std::pair<int, int>>> parts;
  /// Order of input `poly` at a leaf that belongs to another input.
  Rational order(int leaf, int poly) const;
  /// Leaves of input `poly` with their multiplicities.
  std::vector<std::pair<int, int>> leaves(int poly) const;
};
WeightedTree expand_weighted(const std::vector<BiPoly>& polys, const std::vector<std::string>& names,
                             const ExpandOptions& options);

/// -sum over roots beta of g of ord f(beta).
Rational intersection_by_root_orders(const BiPoly& f, const BiPoly& g, const ExpandOptions& options);

/// -sum over split nodes of `label` of conj * (e - 1) * lambda.
Rational split_formula(const RootTree& tree, int label);
Rational i_fxfy_split_formula(const BiPoly& f, const Rational& xi, const ExpandOptions& options);

/// The two multisets compared by the root partition property, sorted.
struct RootPartition {
  std::vector<Rational> at_derivative_roots;  // ord f_xi(beta) for f_y(beta) = 0
  std::vector<Rational> at_split_nodes;       // lambda repeated (e - 1) times
  bool equal = false;
};
RootPartition root_partition_check(const BiPoly& f, const Rational& xi, const ExpandOptions& options);

struct GenericCertificate {
  bool resultant_nonzero = false;  // Res_y(f - xi, f_y) is not identically zero
  long resultant_degree = -1;
  bool accepted() const { return resultant_nonzero; }
};
GenericCertificate check_generic(const BiPoly& f, const Rational& xi);

struct GenericShift {
  Rational xi;
  GenericCertificate certificate;
  int attempts = 0;
};
/// Draws xi from a seeded generator until the certificate holds.
GenericShift pick_generic_xi(const BiPoly& f, std::uint64_t seed, int max_attempts = 64);

/// Residual of g_y(a) d/dt f(a) - f_y(a) d/dt g(a) + J(1/t, a) t^-2 at a
/// truncated root a, known below `cutoff`.
struct ChainRuleCheck {
  Series residual;
  Rational known_below;
  bool vanishes = false;
};
ChainRuleCheck chain_rule_residual(const BiPoly& f, const BiPoly& g, const TruncatedPuiseux& alpha,
                                   const Rational& cutoff);

/// Joint tree of (f - xi, g) with its root classification.
struct PairAnalysis {
  BiPoly f, g;
  Rational xi;
  RootTree tree;
  RootClassification classes;
};
/// Requires J(f, g) to be a nonzero constant.
PairAnalysis analyse_jacobian_pair(const BiPoly& f, const BiPoly& g, const Rational& xi,
                                   const ExpandOptions& options);

struct MinorFormulas {
  Rational i_fxi_fy;  // m - 1 + sum conj (|D| - 1)(delta - 1)
  Rational i_fxi_g;   // 1 + sum conj (delta - 1)
  int final_minor_roots = 0;
};
MinorFormulas i_minor_formulas(const PairAnalysis& a);

struct MajorFormula {
  Rational via_lambda;  // -sum conj |D| lambda_g
  Rational via_delta;   // n/(m+n) sum conj |D| (1 - delta)
  bool agree() const { return via_lambda == via_delta; }
};
MajorFormula i_major_formula(const PairAnalysis& a);

/// Conditions of the equivalence for a Jacobian pair, each computed
/// independently.
struct EquivalenceReport {
  bool field_degree_one = false;  // I(f_xi, g) == 1
  bool no_minor_roots = false;
  bool derivative_count = false;  // I(f_xi, f_y) == m - 1
  bool consistent() const {
    return field_degree_one == no_minor_roots && no_minor_roots == derivative_count;
  }
};
EquivalenceReport equivalence_suite(const PairAnalysis& a);

struct ExtensionBound {
  long intersection = 0;
  Rational bound;  // mn/(m+n)
  bool holds() const { return Rational(intersection) < bound; }
};
/// Requires deg_y f > 1 and deg_y g > 1.
ExtensionBound extension_degree_bound_check(const BiPoly& f, const BiPoly& g, const Rational& xi);

/// Composition of elementary automorphisms, with f, g monic in y.
struct TamePair {
  BiPoly f, g;
  std::vector<std::string> steps;
};
TamePair random_tame_pair(std::mt19937_64& rng, int max_deg_y = 12, int max_maps = 3);

/// Every intersection route for (f - xi, g) and (f - xi, f_y).
struct IntersectionReport {
  Rational xi;
  GenericCertificate certificate;
  bool jacobian_pair = false;
  long fxi_g_resultant = 0;
  Rational fxi_g_root_orders;
  std::optional<Rational> fxi_g_minor, fxi_g_major, fxi_g_major_delta;
  long fxi_fy_resultant = 0;
  Rational fxi_fy_split;
  std::optional<Rational> fxi_fy_minor;
  int minor_roots = -1;
  int major_roots = -1;
  bool agree() const;
};
IntersectionReport intersect(const BiPoly& f, const BiPoly& g, const Rational& xi, const ExpandOptions& options);

}  // namespace pjl
