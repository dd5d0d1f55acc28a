#include "pjl/qpoly.hpp"

#include <sstream>

#include "pjl/error.hpp"

namespace pjl {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const Rational& s) {
  if (s == 0) return {};
  QPoly r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::kZeroPolynomial, "division by the zero polynomial");
  if (degree() < d.degree()) return {QPoly(), *this};
  std::vector<Rational> r = c_;
  std::vector<Rational> q(c_.size() - d.c_.size() + 1);
  const Rational inv = 1 / d.lc();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational coef = r[k + dd] * inv;
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= coef * d.c_[j];
  }
  r.resize(dd);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly QPoly::exact_div(const QPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) fail(ErrorCode::kInternal, "inexact polynomial division");
  return q;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / lc());
}

Rational QPoly::eval(const Rational& v) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

QPoly QPoly::compose(const QPoly& other) const {
  QPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * other + QPoly(c_[i]);
  return acc;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::vector<Integer> QPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& x : c_) den = lcm(den, x.get_den());
  std::vector<Integer> z(c_.size());
  Integer g = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational t = c_[i] * den;
    z[i] = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

QPoly QPoly::from_integer(const std::vector<Integer>& z) {
  std::vector<Rational> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rational(z[i]);
  return QPoly(std::move(v));
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0) {
      os << pjl::to_string(mag);
      continue;
    }
    if (!unit) os << pjl::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

QXgcd xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
  Rational inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const QPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace pjl
