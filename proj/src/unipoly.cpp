#include "pjl/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "pjl/bipoly.hpp"
#include "pjl/error.hpp"
#include "pjl/factor_q.hpp"

namespace pjl {

UniPoly::UniPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (c.field() != field_) c = FieldElement(field_, c.rational());
  trim();
}

UniPoly UniPoly::from_rational(const QPoly& p, const FieldPtr& field) {
  std::vector<FieldElement> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(field, v);
  return UniPoly(field, std::move(c));
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::linear_root(const FieldElement& c) {
  return UniPoly(c.field(), {-c, FieldElement(c.field(), Rational(1))});
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement UniPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : FieldElement(field_, Rational(0));
}

bool UniPoly::is_rational() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& c) { return c.is_rational(); });
}

QPoly UniPoly::to_rational() const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(v.rational());
  return QPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {
const FieldPtr& join(const FieldPtr& a, const FieldPtr& b) { return a->is_rationals() ? b : a; }
}  // namespace

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r(join(a.field_, b.field_));
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), FieldElement(r.field_, Rational(0)));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
  r.trim();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r(join(a.field_, b.field_));
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElement(r.field_, Rational(0)));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

UniPoly operator*(const UniPoly& a, const FieldElement& s) {
  UniPoly r = a;
  r.field_ = join(a.field_, s.field());
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::kZeroPolynomial, "polynomial division by zero");
  UniPoly rem = *this;
  UniPoly quo(field_);
  if (degree() < d.degree()) return {quo, rem};
  quo.c_.assign(static_cast<std::size_t>(degree() - d.degree() + 1), FieldElement(field_, Rational(0)));
  FieldElement inv = d.lc().inverse();
  const std::size_t dn = d.c_.size();
  for (std::size_t k = quo.c_.size(); k-- > 0;) {
    FieldElement c = rem.c_[k + dn - 1] * inv;
    quo.c_[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dn; ++j) rem.c_[k + j] -= c * d.c_[j];
  }
  rem.c_.resize(dn - 1, FieldElement(field_, Rational(0)));
  rem.trim();
  quo.trim();
  return {quo, rem};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) fail(ErrorCode::kInternal, "inexact polynomial division");
  return q;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * FieldElement(field_, Rational(static_cast<long>(i))));
  r.trim();
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = constant(FieldElement(field_, Rational(1))), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

FieldElement UniPoly::eval(const FieldElement& v) const {
  FieldElement r(field_, Rational(0));
  for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
  return r;
}

UniPoly UniPoly::shift(const FieldElement& c) const {
  UniPoly lin(field_, {c, FieldElement(field_, Rational(1))});
  UniPoly r(field_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
  return r;
}

UniPoly UniPoly::map(const Embedding& e) const {
  std::vector<FieldElement> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(e.apply(v));
  return UniPoly(e.to, std::move(c));
}

std::string UniPoly::to_string(const std::string& var, const std::string& gen) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const FieldElement& c = c_[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (c.is_rational()) {
      Rational v = c.rational();
      if (first) {
        if (v < 0) os << "-";
      } else {
        os << (v < 0 ? " - " : " + ");
      }
      Rational mag = abs(v);
      if (mono.empty())
        os << pjl::to_string(mag);
      else if (mag == 1)
        os << mono;
      else
        os << pjl::to_string(mag) << "*" << mono;
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string(gen) << ")";
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

SquarefreeInfo squarefree_and_distinct_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, "distinct roots of the zero polynomial");
  UniPoly g = poly_gcd(p, p.derivative());
  UniPoly sq = p.exact_div(g).monic();
  return {sq, static_cast<int>(sq.degree())};
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, "squarefree decomposition of zero");
  std::vector<UniPoly> parts;
  UniPoly a = p.monic();
  UniPoly b = a.derivative();
  UniPoly c = poly_gcd(a, b);
  UniPoly w = a.exact_div(c);
  UniPoly y = b.exact_div(c);
  UniPoly z = y - w.derivative();
  while (w.degree() > 0) {
    UniPoly g = poly_gcd(w, z);
    parts.push_back(g);
    w = w.exact_div(g);
    y = z.exact_div(g);
    z = y - w.derivative();
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

QPoly shifted_norm(const UniPoly& h, long s) {
  const FieldPtr& k = h.field();
  if (k->is_rationals()) return h.to_rational();
  // H(x - s*y, y) with y standing for the primitive element; resultant in y
  // against its minimal polynomial.
  BiPoly shifted_pi = BiPoly::x() - BiPoly::y() * Rational(s);
  BiPoly H;
  for (std::size_t i = h.coeffs().size(); i-- > 0;) {
    const QPoly& rep = h.coeffs()[i].rep();
    BiPoly ci;
    for (std::size_t j = 0; j < rep.coeffs().size(); ++j)
      ci += BiPoly::monomial(rep.coeffs()[j], 0, static_cast<int>(j));
    H = H * shifted_pi + ci;
  }
  BiPoly m;
  for (std::size_t j = 0; j < k->minpoly().coeffs().size(); ++j)
    m += BiPoly::monomial(k->minpoly().coeffs()[j], 0, static_cast<int>(j));
  return resultant_y(m, H);
}

namespace {

long shift_candidate(int i) { return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2); }

std::vector<UniPoly> factor_squarefree_over(const UniPoly& q) {
  const FieldPtr& k = q.field();
  if (q.degree() <= 0) return {};
  if (q.degree() == 1) return {q.monic()};
  if (k->is_rationals()) {
    std::vector<UniPoly> out;
    for (const auto& f : factor_squarefree_rational(q.to_rational()))
      out.push_back(UniPoly::from_rational(f, k));
    return out;
  }
  const FieldElement gamma = FieldElement::generator(k);
  for (int i = 0; i < 64; ++i) {
    long s = shift_candidate(i);
    QPoly norm = shifted_norm(q, s);
    if (!is_squarefree(norm)) continue;
    std::vector<UniPoly> out;
    UniPoly rest = q.monic();
    const FieldElement sg = gamma * FieldElement(k, Rational(s));
    for (const auto& nj : factor_squarefree_rational(norm)) {
      UniPoly shifted = UniPoly::from_rational(nj, k).shift(sg);
      UniPoly g = poly_gcd(rest, shifted);
      if (g.degree() <= 0) continue;
      out.push_back(g);
      rest = rest.exact_div(g);
    }
    if (rest.degree() > 0) fail(ErrorCode::kInternal, "norm factorization did not exhaust polynomial");
    return out;
  }
  fail(ErrorCode::kInternal, "no squarefree norm shift found");
}

}  // namespace

std::vector<Factor> factor_over_tower(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, "factorization of the zero polynomial");
  std::vector<Factor> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (auto& f : factor_squarefree_over(parts[i])) out.push_back({std::move(f), static_cast<int>(i + 1)});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    std::string sa = a.factor.to_string(), sb = b.factor.to_string();
    if (sa != sb) return sa < sb;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

Extension adjoin_root(const UniPoly& h, int budget, const std::string& generator_name) {
  const FieldPtr& k = h.field();
  if (h.degree() < 1) fail(ErrorCode::kInvalidArgument, "adjoin_root needs a nonconstant polynomial");
  UniPoly hm = h.monic();
  if (hm.degree() == 1) return {k, Embedding::identity(k), -hm.coeff(0)};
  const long total = static_cast<long>(k->degree()) * hm.degree();
  if (total > budget)
    fail(ErrorCode::kExtensionBudgetExceeded,
         "extension degree " + std::to_string(total) + " exceeds budget " + std::to_string(budget));
  std::vector<TowerStep> steps = k->steps();
  steps.push_back({generator_name, hm.to_string(generator_name, "w")});
  if (k->is_rationals()) {
    FieldPtr l = NumberField::make(hm.to_rational(), std::move(steps));
    return {l, Embedding{k, l, FieldElement(l, Rational(0))}, FieldElement::generator(l)};
  }
  for (int i = 0; i < 64; ++i) {
    long s = shift_candidate(i);
    QPoly norm = shifted_norm(hm, s);
    if (!is_squarefree(norm)) continue;
    FieldPtr l = NumberField::make(norm.monic(), steps);
    const FieldElement omega = FieldElement::generator(l);
    const FieldElement sl(l, Rational(s));
    // gamma(omega) is the common root of m(z) and H(omega - s z, z).
    UniPoly m = UniPoly::from_rational(k->minpoly(), l);
    UniPoly lin(l, {omega, -sl});
    UniPoly H(l);
    for (std::size_t j = hm.coeffs().size(); j-- > 0;) H = H * lin + UniPoly::from_rational(hm.coeffs()[j].rep(), l);
    UniPoly g = poly_gcd(m, H);
    if (g.degree() != 1) fail(ErrorCode::kInternal, "primitive element gcd is not linear");
    FieldElement gamma = -g.coeff(0);
    FieldElement beta = omega - sl * gamma;
    return {l, Embedding{k, l, gamma}, beta};
  }
  fail(ErrorCode::kInternal, "no primitive element shift found");
}

}  // namespace pjl
