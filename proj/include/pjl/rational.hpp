#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace pjl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Error on bad input.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Canonical n/d (mpq_class(n, d) alone does not reduce).
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational rational_pow(const Rational& base, long exponent);

Integer integer_floor(const Rational& r);
Integer integer_ceil(const Rational& r);

/// Lowest common multiple of the denominators; 1 for integers.
Integer lcm(const Integer& a, const Integer& b);

/// Exponent that may be +infinity (order of the zero series, unbounded precision).
class Order {
 public:
  Order() : value_(std::nullopt) {}  // +infinity
  Order(const Rational& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static Order infinity() { return Order(); }
  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const Order& a, const Order& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const Order& a, const Order& b) {
    if (a.is_infinite())
      return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend Order operator+(const Order& a, const Order& b) {
    if (a.is_infinite() || b.is_infinite()) return Order();
    return Order(Rational(*a.value_ + *b.value_));
  }

  std::string to_string() const { return is_infinite() ? "inf" : pjl::to_string(*value_); }

 private:
  std::optional<Rational> value_;
};

inline Order min(const Order& a, const Order& b) { return a < b ? a : b; }

}  // namespace pjl
