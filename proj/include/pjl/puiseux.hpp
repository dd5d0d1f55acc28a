#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pjl/bipoly.hpp"
#include "pjl/series.hpp"
#include "pjl/unipoly.hpp"

namespace pjl {

/// Polynomial in y whose coefficients are Laurent polynomials in t, obtained
/// from a polynomial in x, y by x = 1/t.
struct TPoly {
  std::vector<Series> coeffs;  // index = power of y
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  TPoly dy() const;
  std::string to_string() const;
};

TPoly to_t_domain(const BiPoly& f);

struct NewtonEdge {
  Rational slope;  // order of the roots on this edge
  int length;      // number of roots
};
/// Edges of the lower hull of {(j, ord a_j)}, by increasing slope.
std::vector<NewtonEdge> newton_polygon(const TPoly& F);

/// Truncated Puiseux series with rational exponents below `cutoff`.
struct TruncatedPuiseux {
  std::vector<std::pair<Rational, FieldElement>> terms;
  std::optional<Rational> cutoff;  // nullopt: the sum is exact
  FieldPtr field = NumberField::rationals();

  Series to_series(long den) const;
  long ramification() const;  // common denominator of the exponents
  static TruncatedPuiseux from_series(const Series& s, const FieldPtr& field);
};

/// A prefix with a symbolic top term pi*t^delta.
struct PiRootSpec {
  TruncatedPuiseux prefix;
  Rational delta;
};

/// (t-exponent, polynomial in pi) pairs of F(sigma) below `cutoff`, by
/// increasing exponent; the first is (lambda, F_sigma(pi)).
std::vector<std::pair<Rational, UniPoly>> eval_pi_root(const TPoly& F, const PiRootSpec& sigma,
                                                     const Rational& cutoff);

/// F(a) known below `target` (units of 1/a.den()).
Series eval_at_series(const TPoly& F, const Series& a, long target);

struct LabelData {
  int count = 0;        // roots of this label inside the cluster
  UniPoly form;         // leading form (degree == count); zero when count == 0
  Rational lambda;      // order of the label at the pi-root
  int e = 0;            // distinct roots of the leading form
  Rational v;           // order contribution of the label's roots outside the cluster
};

enum class NodeKind { kRoot, kSplit, kLeaf };

/// One representative of a class of conjugate pi-roots.
struct TreeNode {
  int id = 0;
  int parent = -1;
  std::vector<int> children;
  NodeKind kind = NodeKind::kSplit;
  FieldPtr field = NumberField::rationals();
  TruncatedPuiseux prefix;        // exact prefix, exponents < delta
  std::optional<Rational> delta;  // split order; unset for leaves
  long conj = 1;                  // number of conjugate copies represented
  long ramification = 1;          // common denominator of all orders on the path
  std::vector<LabelData> labels;
  int leaf_label = -1;            // leaves: label owning the root
  Rational separation;            // leaves: order at which the root became isolated

  int total_count() const;
  /// e of the product of all labels' leading forms.
  int joint_e = 0;
};

struct ExpandOptions {
  Rational cutoff = 10;
  int ext_budget = kDefaultExtensionBudget;
  /// Largest split order searched; defaults to the cutoff.
  std::optional<Rational> separation_limit;
};

/// Joint tree of the roots of several polynomials (each with constant
/// leading coefficient in y). Nodes are the root pi-root, the pi-roots where
/// the union of roots splits, and leaves (isolated roots).
struct RootTree {
  std::vector<BiPoly> polys;  // normalised to leading coefficient 1
  std::vector<TPoly> tpolys;
  std::vector<std::string> label_names;
  std::vector<TreeNode> nodes;
  ExpandOptions options;

  const TreeNode& root() const { return nodes.front(); }
  std::vector<int> leaves(int label) const;
  /// ord F_label(alpha) at a leaf; for the leaf's own label this is the order
  /// of the y-derivative.
  Rational order_at_leaf(int leaf, int label) const;
  /// Path from the root to `node` (inclusive).
  std::vector<int> path(int node) const;
  /// Prefix + pi*t^delta at an internal node.
  PiRootSpec pi_root(int node) const;
  /// Nodes where the leading form of `label` has at least two distinct roots.
  std::vector<int> split_nodes(int label) const;
};

Rational default_cutoff(const BiPoly& f);

RootTree expand_joint(const std::vector<BiPoly>& polys, const std::vector<std::string>& names,
                      const ExpandOptions& options);
/// Tree of f - xi.
RootTree expand_root_tree(const BiPoly& f, const Rational& xi, const ExpandOptions& options);

/// Root series of a leaf, exact below `order` (all exponents < order).
TruncatedPuiseux lift_leaf(const RootTree& tree, int leaf, const Rational& order);

/// F_y(sigma) has leading pair (lambda - delta, F_sigma'(pi)) at an internal node.
bool derivative_leading_form_check(const RootTree& tree, int node, int label);

enum class RootKind { kMajor, kMinor, kOther };

struct RootInfo {
  int leaf = 0;
  long conj = 1;
  Rational ord_g;
  RootKind kind = RootKind::kOther;
  Rational delta_alpha;  // max order of alpha - beta over roots beta of g
  int sigma_node = 0;    // node of the final pi-root sigma_alpha
  int D = 0;             // |D| at sigma_alpha: roots of f in its cluster
  Rational lambda_g;     // order of g at sigma_alpha
  bool sigma_final = false;
};

struct RootClassification {
  std::vector<RootInfo> roots;  // one per leaf of label 0
  int minor_count() const;
  int major_count() const;
};

/// Classifies the roots of label 0 against label 1 of a joint tree.
RootClassification classify_roots(const RootTree& tree);

/// Every root of label 0 in the subtree of `node` is minor.
bool minor_disc_check(const RootTree& tree, const RootClassification& c, int node);

}  // namespace pjl
