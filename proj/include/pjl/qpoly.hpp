#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pjl/rational.hpp"

namespace pjl {

/// Dense univariate polynomial over Q, coefficient i multiplies var^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QPoly(long constant) : QPoly(Rational(constant)) {}  // NOLINT

  static QPoly monomial(const Rational& c, std::size_t degree);
  static QPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lc() const { return c_.back(); }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const Rational& s);
  QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
  QPoly& operator-=(const QPoly& b) { return *this = *this - b; }
  QPoly& operator*=(const QPoly& b) { return *this = *this * b; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  QPoly operator/(const QPoly& d) const { return divmod(d).first; }
  QPoly operator%(const QPoly& d) const { return divmod(d).second; }
  /// Quotient that must be exact; throws otherwise.
  QPoly exact_div(const QPoly& d) const;

  QPoly derivative() const;
  QPoly monic() const;
  Rational eval(const Rational& v) const;
  /// this(other)
  QPoly compose(const QPoly& other) const;
  QPoly pow(unsigned e) const;

  /// Clears denominators and content: integer primitive with positive lc.
  std::vector<Integer> primitive_integer() const;
  static QPoly from_integer(const std::vector<Integer>& z);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g monic.
struct QXgcd {
  QPoly g, s, t;
};
QXgcd xgcd(const QPoly& a, const QPoly& b);

bool is_squarefree(const QPoly& p);

}  // namespace pjl
