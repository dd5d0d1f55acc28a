#include "pjl/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "pjl/error.hpp"

namespace pjl {

BiPoly::BiPoly(const Rational& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiPoly BiPoly::monomial(const Rational& c, int ex, int ey) {
  if (ex < 0 || ey < 0) fail(ErrorCode::kInvalidArgument, "negative exponent in monomial");
  BiPoly p;
  if (c != 0) p.terms_[{ex, ey}] = c;
  return p;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<QPoly>& coeffs) {
  BiPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (std::size_t i = 0; i < coeffs[j].coeffs().size(); ++i)
      p.add_term({static_cast<int>(i), static_cast<int>(j)}, coeffs[j].coeffs()[i]);
  return p;
}

BiPoly BiPoly::from_x(const QPoly& q) { return from_y_coeffs({q}); }

void BiPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BiPoly::coeff(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

QPoly BiPoly::coeff_y(int j) const {
  std::vector<Rational> c;
  for (const auto& [k, v] : terms_) {
    if (k.second != j) continue;
    if (c.size() <= static_cast<std::size_t>(k.first)) c.resize(static_cast<std::size_t>(k.first) + 1);
    c[static_cast<std::size_t>(k.first)] = v;
  }
  return QPoly(std::move(c));
}

std::vector<QPoly> BiPoly::y_coeffs() const {
  std::vector<QPoly> out;
  for (int j = 0; j <= deg_y(); ++j) out.push_back(coeff_y(j));
  return out;
}

bool BiPoly::has_constant_lc_y() const {
  if (is_zero()) return false;
  return coeff_y(deg_y()).degree() == 0;
}

bool BiPoly::is_monic_y() const {
  if (is_zero()) return false;
  QPoly lc = coeff_y(deg_y());
  return lc.degree() == 0 && lc.lc() == 1;
}

bool BiPoly::is_constant() const { return deg_x() <= 0 && deg_y() <= 0; }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  r += b;
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  r -= b;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& b) {
  for (const auto& [k, c] : b.terms_) add_term(k, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

BiPoly operator*(const BiPoly& a, const Rational& s) {
  if (s == 0) return {};
  BiPoly r = a;
  for (auto& [k, c] : r.terms_) c *= s;
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.add_term({k.first - 1, k.second}, c * k.first);
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) r.add_term({k.first, k.second - 1}, c * k.second);
  return r;
}

BiPoly BiPoly::substitute(const BiPoly& X, const BiPoly& Y) const {
  // Horner in y, with x-coefficients evaluated by Horner in X.
  BiPoly result;
  auto ycoef = y_coeffs();
  for (std::size_t j = ycoef.size(); j-- > 0;) {
    BiPoly cx;
    const auto& cc = ycoef[j].coeffs();
    for (std::size_t i = cc.size(); i-- > 0;) cx = cx * X + BiPoly(cc[i]);
    result = result * Y + cx;
  }
  return result;
}

std::string BiPoly::to_string(const std::string& xv, const std::string& yv) const {
  if (terms_.empty()) return "0";
  // Descending total degree, then descending y-degree.
  std::vector<std::pair<Key, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.second > b.first.second;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ts) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    auto power = [](const std::string& v, int e) { return e == 1 ? v : v + "^" + std::to_string(e); };
    if (k.first > 0) mono = power(xv, k.first);
    if (k.second > 0) mono += (mono.empty() ? "" : "*") + power(yv, k.second);
    if (mono.empty()) {
      os << pjl::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << pjl::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

BiPoly jacobian(const BiPoly& f, const BiPoly& g) { return f.dx() * g.dy() - f.dy() * g.dx(); }

namespace {

void trim(std::vector<QPoly>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

long deg(const std::vector<QPoly>& a) { return static_cast<long>(a.size()) - 1; }

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
std::vector<QPoly> prem(std::vector<QPoly> a, const std::vector<QPoly>& b) {
  const long db = deg(b);
  const QPoly& lb = b.back();
  long e = deg(a) - db + 1;
  while (deg(a) >= db) {
    QPoly la = a.back();
    long shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (long j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    QPoly scale = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= scale;
  }
  return a;
}

}  // namespace

QPoly resultant_over_qx(std::vector<QPoly> A, std::vector<QPoly> B) {
  trim(A);
  trim(B);
  if (A.empty() || B.empty()) return QPoly();
  QPoly s(1);
  if (deg(A) < deg(B)) {
    std::swap(A, B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
  }
  if (deg(B) == 0) return s * B[0].pow(static_cast<unsigned>(deg(A)));
  QPoly g(1), h(1);
  for (;;) {
    long delta = deg(A) - deg(B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
    std::vector<QPoly> R = prem(A, B);
    if (R.empty()) return QPoly();
    A = std::move(B);
    QPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : R) c = c.exact_div(divisor);
    B = std::move(R);
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = g.pow(static_cast<unsigned>(delta)).exact_div(h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (deg(B) == 0) {
      long da = deg(A);
      QPoly top = B[0].pow(static_cast<unsigned>(da));
      QPoly res = da >= 1 ? top.exact_div(h.pow(static_cast<unsigned>(da - 1))) : top;
      return s * res;
    }
  }
}

namespace {

std::vector<QPoly> primitive_y(std::vector<QPoly> v) {
  QPoly c;
  for (const auto& x : v) c = gcd(c, x);
  if (c.is_zero()) return v;
  for (auto& x : v) x = x.exact_div(c);
  return v;
}

}  // namespace

BiPoly gcd_y(const BiPoly& a, const BiPoly& b) {
  std::vector<QPoly> A = primitive_y(a.y_coeffs()), B = primitive_y(b.y_coeffs());
  trim(A);
  trim(B);
  if (deg(A) < deg(B)) std::swap(A, B);
  while (!B.empty()) {
    std::vector<QPoly> R = prem(A, B);
    A = std::move(B);
    B = R.empty() ? R : primitive_y(std::move(R));
  }
  if (A.empty()) return BiPoly();
  if (deg(A) == 0) return BiPoly(1);
  Rational lead = A.back().lc();
  for (auto& c : A) c = c * (1 / lead);
  return BiPoly::from_y_coeffs(A);
}

BiPoly exact_div_y(const BiPoly& a, const BiPoly& d) {
  if (!d.has_constant_lc_y()) fail(ErrorCode::kInvalidArgument, "divisor needs a constant leading coefficient in y");
  std::vector<QPoly> r = a.y_coeffs(), dv = d.y_coeffs();
  trim(r);
  const long dd = deg(dv);
  const Rational inv = 1 / dv.back().lc();
  std::vector<QPoly> q(r.size() >= dv.size() ? r.size() - dv.size() + 1 : 0);
  while (deg(r) >= dd) {
    long shift = deg(r) - dd;
    QPoly c = r.back() * inv;
    q[static_cast<std::size_t>(shift)] = c;
    for (long j = 0; j <= dd; ++j) r[static_cast<std::size_t>(j + shift)] -= c * dv[static_cast<std::size_t>(j)];
    trim(r);
  }
  if (!r.empty()) fail(ErrorCode::kInternal, "inexact bivariate division");
  return BiPoly::from_y_coeffs(q);
}

std::vector<BiPoly> squarefree_parts_y(const BiPoly& f) {
  if (f.deg_y() < 1 || !f.has_constant_lc_y())
    fail(ErrorCode::kPrecondition, "squarefree decomposition needs positive degree and constant leading coefficient");
  BiPoly a = f * (1 / f.coeff_y(f.deg_y()).lc());
  BiPoly b = a.dy();
  BiPoly c = gcd_y(a, b);
  BiPoly w = exact_div_y(a, c);
  BiPoly y = exact_div_y(b, c);
  BiPoly z = y - w.dy();
  std::vector<BiPoly> parts;
  while (w.deg_y() > 0) {
    BiPoly g = z.is_zero() ? w : gcd_y(w, z);
    parts.push_back(g);
    w = exact_div_y(w, g);
    y = exact_div_y(z, g);
    z = y - w.dy();
  }
  while (!parts.empty() && parts.back().deg_y() <= 0) parts.pop_back();
  return parts;
}

QPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  if (f.deg_y() < 1 && g.deg_y() < 1)
    fail(ErrorCode::kInvalidArgument, "resultant_y: both polynomials are constant in y");
  return resultant_over_qx(f.y_coeffs(), g.y_coeffs());
}

}  // namespace pjl
