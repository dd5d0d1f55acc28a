#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pjl/field.hpp"

namespace pjl {

/// Dense univariate polynomial over a number field, trailing zeros trimmed.
class UniPoly {
 public:
  explicit UniPoly(FieldPtr field = NumberField::rationals()) : field_(std::move(field)) {}
  UniPoly(FieldPtr field, std::vector<FieldElement> coeffs);
  static UniPoly from_rational(const QPoly& p, const FieldPtr& field = NumberField::rationals());
  static UniPoly constant(const FieldElement& c);
  /// pi - c
  static UniPoly linear_root(const FieldElement& c);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 stands for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(std::size_t i) const;
  const FieldElement& lc() const { return c_.back(); }
  /// All coefficients rational.
  bool is_rational() const;
  QPoly to_rational() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const FieldElement& s);
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly exact_div(const UniPoly& d) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned e) const;
  FieldElement eval(const FieldElement& v) const;
  /// p(pi + c)
  UniPoly shift(const FieldElement& c) const;
  UniPoly map(const Embedding& e) const;

  /// Coefficients printed as parenthesised polynomials in `gen` when not rational.
  std::string to_string(const std::string& var = "pi", const std::string& gen = "w") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<FieldElement> c_;
};

/// Monic gcd; gcd(a, 0) = monic(a).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeInfo {
  UniPoly squarefree_part;  // monic
  int e;                    // number of distinct roots
};
/// e = deg(p / gcd(p, p')).
SquarefreeInfo squarefree_and_distinct_roots(const UniPoly& p);

/// Yun decomposition over the field: p = lc * prod parts[i]^(i+1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

struct Factor {
  UniPoly factor;  // monic irreducible over the coefficient field
  int multiplicity;
};

/// Default extension degree budget.
inline constexpr int kDefaultExtensionBudget = 48;

/// Factorization into monic irreducibles over the coefficient field (norm
/// reduction to factorization over Q).
std::vector<Factor> factor_over_tower(const UniPoly& p);

/// Result of adjoining a root of an irreducible polynomial.
struct Extension {
  FieldPtr field;
  Embedding embed;   // old field into the new one
  FieldElement root;  // root of the polynomial in the new field
};

/// Adjoins a root of h (monic irreducible over its field, degree >= 2). The
/// new field is again simple; its degree over Q must not exceed `budget`.
Extension adjoin_root(const UniPoly& h, int budget, const std::string& generator_name);

/// Norm of h(pi - s*w) down to Q, where w is the primitive element.
QPoly shifted_norm(const UniPoly& h, long s);

}  // namespace pjl
