#include "pjl/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pjl/error.hpp"

namespace pjl {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long to_units(const Rational& r, long den) {
  Rational scaled = r * den;
  if (!is_integer(scaled)) fail(ErrorCode::kInternal, "exponent does not fit the series denominator");
  if (!scaled.get_num().fits_slong_p()) fail(ErrorCode::kInternal, "exponent out of range");
  return scaled.get_num().get_si();
}

Series::Series(long den, std::vector<Term> terms, long prec) : den_(den), terms_(std::move(terms)), prec_(prec) {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (t.first >= prec_) break;
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  terms_.clear();
  for (auto& t : merged)
    if (!t.second.is_zero()) terms_.push_back(std::move(t));
}

Series Series::constant(const FieldElement& c, long den) { return monomial(c, 0, den); }

Series Series::monomial(const FieldElement& c, long e, long den) {
  Series s(den);
  if (!c.is_zero()) s.terms_.emplace_back(e, c);
  return s;
}

Rational Series::ord_rational() const { return frac(ord(), den_); }

Series Series::rescaled(long new_den) const {
  if (new_den == den_) return *this;
  if (new_den % den_ != 0) fail(ErrorCode::kInternal, "series rescale to a non-multiple denominator");
  long f = new_den / den_;
  Series s(new_den);
  s.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.terms_.emplace_back(e * f, c);
  s.prec_ = exact() ? kExact : prec_ * f;
  return s;
}

Series Series::truncated(long limit) const {
  if (limit >= prec_) return *this;
  Series s(den_);
  bool dropped = false;
  for (const auto& t : terms_) {
    if (t.first >= limit) {
      dropped = true;
      break;
    }
    s.terms_.push_back(t);
  }
  // An exact series whose terms all lie below the limit stays exact.
  s.prec_ = (exact() && !dropped) ? kExact : limit;
  return s;
}

Series Series::mapped(const Embedding& e) const {
  Series s = *this;
  for (auto& t : s.terms_) t.second = e.apply(t.second);
  return s;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Series operator+(const Series& a, const Series& b) {
  if (a.den_ != b.den_) {
    long d = lcm_long(a.den_, b.den_);
    return a.rescaled(d) + b.rescaled(d);
  }
  Series s(a.den_);
  s.prec_ = std::min(a.prec_, b.prec_);
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    long ea = i < a.terms_.size() ? a.terms_[i].first : kExact;
    long eb = j < b.terms_.size() ? b.terms_[j].first : kExact;
    long e = std::min(ea, eb);
    if (e >= s.prec_) break;
    if (ea == eb) {
      FieldElement c = a.terms_[i].second + b.terms_[j].second;
      if (!c.is_zero()) s.terms_.emplace_back(e, std::move(c));
      ++i;
      ++j;
    } else if (ea < eb) {
      s.terms_.push_back(a.terms_[i++]);
    } else {
      s.terms_.push_back(b.terms_[j++]);
    }
  }
  return s;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series Series::scaled(const FieldElement& c) const {
  if (c.is_zero()) {
    Series s(den_);
    s.prec_ = kExact;
    return s;
  }
  Series s = *this;
  for (auto& t : s.terms_) t.second = t.second * c;
  return s;
}

Series Series::shifted(long shift) const {
  Series s = *this;
  for (auto& t : s.terms_) t.first += shift;
  if (!exact()) s.prec_ += shift;
  return s;
}

Series Series::derivative() const {
  Series s(den_);
  for (const auto& [e, c] : terms_) {
    if (e == 0) continue;
    s.terms_.emplace_back(e - den_, c * FieldElement(c.field(), frac(e, den_)));
  }
  s.prec_ = exact() ? kExact : prec_ - den_;
  return s;
}

Series Series::mul(const Series& a, const Series& b, long limit) {
  if (a.den_ != b.den_) {
    long d = lcm_long(a.den_, b.den_);
    return mul(a.rescaled(d), b.rescaled(d), limit);
  }
  Series s(a.den_);
  // Known precision of the full product.
  long p = kExact;
  if (a.terms_.empty() && a.exact()) return s;
  if (b.terms_.empty() && b.exact()) return s;
  if (!a.exact()) p = std::min(p, a.prec_ + b.ord());
  if (!b.exact()) p = std::min(p, b.prec_ + a.ord());
  // Truncation at the limit only loses exactness if a product term can reach it.
  if (limit < p && !a.terms_.empty() && !b.terms_.empty() &&
      a.terms_.back().first + b.terms_.back().first >= limit)
    p = limit;
  s.prec_ = p;
  std::map<long, FieldElement> acc;
  for (const auto& [ea, ca] : a.terms_) {
    if (!b.terms_.empty() && ea + b.terms_.front().first >= p) break;
    for (const auto& [eb, cb] : b.terms_) {
      long e = ea + eb;
      if (e >= p) break;
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, ca * cb);
      else
        it->second += ca * cb;
    }
  }
  for (auto& [e, c] : acc)
    if (!c.is_zero()) s.terms_.emplace_back(e, std::move(c));
  return s;
}

Series Series::div(const Series& a, const Series& b, long limit) {
  if (a.den_ != b.den_) {
    long d = lcm_long(a.den_, b.den_);
    return div(a.rescaled(d), b.rescaled(d), limit * (d / a.den_));
  }
  if (b.terms_.empty()) fail(ErrorCode::kInternal, "series division by a series with no known term");
  const long vb = b.terms_.front().first;
  const FieldElement inv = b.terms_.front().second.inverse();
  // Quotient known below min(a.prec - vb, ord(a) + b.prec - 2 vb).
  long p = limit;
  if (!a.exact()) p = std::min(p, a.prec_ - vb);
  if (!b.exact()) p = std::min(p, a.ord() + b.prec_ - 2 * vb);
  Series q(a.den_);
  q.prec_ = p;
  Series r = a.truncated(p == kExact ? kExact : p + vb);
  while (!r.terms_.empty() && r.terms_.front().first - vb < p) {
    long e = r.terms_.front().first - vb;
    FieldElement c = r.terms_.front().second * inv;
    q.terms_.emplace_back(e, c);
    r = r - mul(b, monomial(c, e, a.den_), p + vb);
  }
  return q;
}

}  // namespace pjl
