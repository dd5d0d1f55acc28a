#include "pjl/field.hpp"

#include "pjl/error.hpp"

namespace pjl {

namespace {

// Coefficients of q over their least common denominator.
Integer integral(const QPoly& q, std::vector<Integer>& num) {
  Integer den = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  num.resize(q.coeffs().size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    const Rational& c = q.coeffs()[i];
    mpz_divexact(num[i].get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    num[i] *= c.get_num();
  }
  return den;
}

}  // namespace

NumberField::NumberField(QPoly minpoly, std::vector<TowerStep> steps)
    : minpoly_(std::move(minpoly)), steps_(std::move(steps)) {
  tail_den_ = integral(minpoly_, tail_);
  tail_.pop_back();
}

QPoly NumberField::multiply(const QPoly& a, const QPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> A, B;
  Integer den = integral(a, A) * integral(b, B);
  std::vector<Integer> c(A.size() + B.size() - 1);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i] == 0) continue;
    for (std::size_t j = 0; j < B.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
  }
  const std::size_t n = static_cast<std::size_t>(degree());
  for (std::size_t k = c.size(); k-- > n;) {
    if (c[k] == 0) continue;
    if (tail_den_ != 1) {
      for (std::size_t i = 0; i < k; ++i) c[i] *= tail_den_;
      den *= tail_den_;
    }
    for (std::size_t i = 0; i < n; ++i)
      mpz_submul(c[k - n + i].get_mpz_t(), c[k].get_mpz_t(), tail_[i].get_mpz_t());
  }
  c.resize(std::min(c.size(), n));
  std::vector<Rational> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    r[i] = Rational(c[i], den);
    r[i].canonicalize();
  }
  return QPoly(std::move(r));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField(QPoly::x(), {}));
  return q;
}

FieldPtr NumberField::make(QPoly minpoly, std::vector<TowerStep> steps) {
  if (minpoly.degree() < 1 || minpoly.lc() != 1)
    fail(ErrorCode::kInvalidArgument, "minimal polynomial must be monic of positive degree");
  if (minpoly.degree() == 1) return rationals();
  return FieldPtr(new NumberField(std::move(minpoly), std::move(steps)));
}

FieldElement::FieldElement(FieldPtr field, const QPoly& rep)
    : field_(std::move(field)), rep_(rep.degree() < field_->degree() ? rep : rep % field_->minpoly()) {}

FieldElement::FieldElement(FieldPtr field, const Rational& c) : field_(std::move(field)), rep_(c) {}

FieldElement::FieldElement(FieldPtr field, QPoly rep, bool /*reduced*/)
    : field_(std::move(field)), rep_(std::move(rep)) {}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, QPoly::x());
}

Rational FieldElement::rational() const {
  if (!is_rational()) fail(ErrorCode::kInternal, "field element is not rational");
  return rep_.coeff(0);
}

const FieldPtr& FieldElement::common(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_) return a.field_;
  // A rational constant may be combined with an element of any field.
  if (b.is_rational()) return a.field_;
  if (a.is_rational()) return b.field_;
  fail(ErrorCode::kInternal, "arithmetic between elements of different fields");
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -rep_, true); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(FieldElement::common(a, b), a.rep_ + b.rep_, true);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(FieldElement::common(a, b), a.rep_ - b.rep_, true);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const FieldPtr& k = FieldElement::common(a, b);
  if (a.is_rational() || b.is_rational()) return FieldElement(k, a.rep_ * b.rep_, true);
  return FieldElement(k, k->multiply(a.rep_, b.rep_), true);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.rep_ != b.rep_) return false;
  return a.field_ == b.field_ || a.is_rational();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::kInvalidArgument, "inverse of zero field element");
  if (is_rational()) return FieldElement(field_, QPoly(1 / rep_.coeff(0)), true);
  QXgcd r = xgcd(rep_, field_->minpoly());
  if (r.g.degree() != 0) fail(ErrorCode::kInternal, "minimal polynomial is not irreducible");
  return FieldElement(field_, r.s * (1 / r.g.lc()));
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement r(field_, Rational(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

FieldElement Embedding::apply(const FieldElement& a) const {
  if (a.is_rational()) return FieldElement(to, a.rep().coeff(0));
  if (a.field() != from) fail(ErrorCode::kInternal, "embedding applied to a foreign element");
  FieldElement r(to, Rational(0));
  const auto& c = a.rep().coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * generator_image + FieldElement(to, c[i]);
  return r;
}

Embedding Embedding::identity(const FieldPtr& k) { return {k, k, FieldElement::generator(k)}; }

}  // namespace pjl
