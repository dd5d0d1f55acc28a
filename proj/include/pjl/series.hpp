#pragma once

#include <climits>
#include <optional>
#include <utility>
#include <vector>

#include "pjl/field.hpp"
#include "pjl/rational.hpp"

namespace pjl {

/// Sentinel for an unbounded (exact) precision.
inline constexpr long kExact = LONG_MAX / 4;

/// Truncated Puiseux series  sum c_e t^(e/den)  with exponents in units of
/// 1/den. Terms with exponent >= prec are unknown; prec == kExact means the
/// series is exact (a finite sum).
class Series {
 public:
  using Term = std::pair<long, FieldElement>;

  Series() = default;
  explicit Series(long den) : den_(den) {}
  Series(long den, std::vector<Term> terms, long prec = kExact);
  static Series constant(const FieldElement& c, long den = 1);
  static Series monomial(const FieldElement& c, long e, long den = 1);

  long den() const { return den_; }
  const std::vector<Term>& terms() const { return terms_; }
  long prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  /// Order of the first known term; prec() if none is known (kExact for exact zero).
  long ord() const { return terms_.empty() ? prec_ : terms_.front().first; }
  bool known_zero() const { return terms_.empty(); }
  Rational ord_rational() const;
  Rational exponent(long e) const { return frac(e, den_); }
  const FieldElement& leading() const { return terms_.front().second; }

  /// Same series over a multiple of the denominator.
  Series rescaled(long new_den) const;
  /// Drops terms at or above `limit` (units of 1/den) and lowers prec.
  Series truncated(long limit) const;
  Series mapped(const Embedding& e) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series scaled(const FieldElement& c) const;
  /// Multiplies by t^(shift/den).
  Series shifted(long shift) const;
  /// d/dt
  Series derivative() const;

  /// Product truncated at `limit`; limit == kExact keeps everything.
  static Series mul(const Series& a, const Series& b, long limit = kExact);
  /// Quotient a/b truncated at `limit`; b must have a known leading term.
  static Series div(const Series& a, const Series& b, long limit);

 private:
  long den_ = 1;
  std::vector<Term> terms_;
  long prec_ = kExact;
};

long lcm_long(long a, long b);
/// Rational exponent as units of 1/den; den must be a multiple of its denominator.
long to_units(const Rational& r, long den);

}  // namespace pjl
