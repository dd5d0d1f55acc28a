#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pjl/qpoly.hpp"

namespace pjl {

/// Sparse bivariate polynomial over Q, keyed by (x-exponent, y-exponent).
/// Zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT
  static BiPoly monomial(const Rational& c, int ex, int ey);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  /// sum_j coeffs[j](x) * y^j
  static BiPoly from_y_coeffs(const std::vector<QPoly>& coeffs);
  static BiPoly from_x(const QPoly& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int ex, int ey) const;
  /// -1 for zero.
  int deg_x() const;
  int deg_y() const;
  /// Coefficient of y^j as a polynomial in x.
  QPoly coeff_y(int j) const;
  std::vector<QPoly> y_coeffs() const;
  /// Leading coefficient in y is a nonzero constant.
  bool has_constant_lc_y() const;
  /// Leading coefficient in y is exactly 1.
  bool is_monic_y() const;
  bool is_constant() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const Rational& s);
  BiPoly& operator+=(const BiPoly& b);
  BiPoly& operator-=(const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  BiPoly pow(unsigned e) const;

  BiPoly dx() const;
  BiPoly dy() const;
  /// this(X, Y) for bivariate X, Y.
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const;

  /// Canonical text, e.g. "y^2 - x". Variable names are configurable.
  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

 private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// f_x g_y - f_y g_x
BiPoly jacobian(const BiPoly& f, const BiPoly& g);

/// gcd over Q(x)[y], primitive over Q[x], leading coefficient in y made
/// monic in x. Constant in y (1) when coprime.
BiPoly gcd_y(const BiPoly& a, const BiPoly& b);

/// Division in y by a divisor with constant leading coefficient; must be exact.
BiPoly exact_div_y(const BiPoly& a, const BiPoly& d);

/// Squarefree decomposition over Q(x) of f with constant leading coefficient
/// in y: f = c * prod parts[i]^(i+1), parts with leading coefficient 1.
std::vector<BiPoly> squarefree_parts_y(const BiPoly& f);

/// Resultant in y via the subresultant PRS over Q[x]. Sign convention: the
/// Sylvester determinant with the rows of f first.
QPoly resultant_y(const BiPoly& f, const BiPoly& g);

/// Resultant of univariate polynomials over Q[x] given by y-coefficient lists.
QPoly resultant_over_qx(std::vector<QPoly> a, std::vector<QPoly> b);

}  // namespace pjl
