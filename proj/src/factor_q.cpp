#include "pjl/factor_q.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "pjl/error.hpp"

namespace pjl {
namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31.

using ModPoly = std::vector<std::uint64_t>;

struct Zp {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  // Returns quotient, leaves remainder in a.
  ModPoly divmod(ModPoly& a, const ModPoly& b) const {
    if (b.empty()) fail(ErrorCode::kInternal, "modular division by zero");
    if (a.size() < b.size()) return {};
    ModPoly q(a.size() - b.size() + 1, 0);
    std::uint64_t inv_lc = inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
      std::uint64_t c = mul(a[k + b.size() - 1], inv_lc);
      q[k] = c;
      if (!c) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = sub(a[k + j], mul(c, b[j]));
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return q;
  }
  ModPoly rem(ModPoly a, const ModPoly& b) const {
    divmod(a, b);
    return a;
  }
  ModPoly quo(ModPoly a, const ModPoly& b) const { return divmod(a, b); }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    std::uint64_t i = inv(a.back());
    for (auto& c : a) c = mul(c, i);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b.
  void xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      ModPoly r = r0;
      ModPoly q = divmod(r, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) fail(ErrorCode::kInternal, "modular xgcd of non-coprime inputs");
    std::uint64_t i = inv(r0[0]);
    for (auto& c : s0) c = mul(c, i);
    for (auto& c : t0) c = mul(c, i);
    s = s0;
    t = t0;
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }
  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly result{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
};

ModPoly reduce_mod(const std::vector<Integer>& f, std::uint64_t p) {
  ModPoly r(f.size());
  Integer t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  Zp::trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Zp& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

void equal_degree(const Zp& F, const ModPoly& g, int d, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(F.monic(g));
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  for (;;) {
    ModPoly a(n);
    for (auto& c : a) c = dist(rng);
    Zp::trim(a);
    if (a.size() <= 1) continue;
    ModPoly b = F.powmod(a, e, g);
    b = F.sub(b, ModPoly{1});
    ModPoly u = F.gcd(b, g);
    int du = static_cast<int>(u.size()) - 1;
    if (du > 0 && du < n) {
      equal_degree(F, u, d, rng, out);
      equal_degree(F, F.quo(g, u), d, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers modulo M (coefficients kept in [0, M)).

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

// Division by a monic polynomial modulo m; returns {q, r}.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  a = zmod(a, m);
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = a[k + b.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[k + j] -= c * b[j];
      mpz_fdiv_r(a[k + j].get_mpz_t(), a[k + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  a.resize(b.size() - 1);
  return {zmod(q, m), zmod(a, m)};
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  Integer m2 = m * m;
  ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e), h, m2);
  ZPoly g2 = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
  ZPoly h2 = zmod(zadd(h, r), m2);
  ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)}), m2);
  auto [c, d] = zdivmod_monic(zmul(s, b), h2, m2);
  ZPoly s2 = zmod(zsub(s, d), m2);
  ZPoly t2 = zmod(zsub(t, zadd(zmul(t, b), zmul(c, g2))), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts the monic modular factors of f (f = lc * prod factors mod p) to
// monic factors modulo p^(2^steps).
void multifactor_lift(const ZPoly& f, const std::vector<ModPoly>& factors, const Zp& F,
                      int steps, std::vector<ZPoly>& out) {
  Integer p(static_cast<unsigned long>(F.p));
  Integer M = p;
  for (int i = 0; i < steps; ++i) M *= M;
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    out.push_back(zmod(r, M));
    return;
  }
  std::size_t half = factors.size() / 2;
  std::vector<ModPoly> A(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> B(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly lcmod = reduce_mod(ZPoly{f.back()}, F.p);
  ModPoly g0 = lcmod;
  for (const auto& a : A) g0 = F.mul(g0, a);
  ModPoly h0{1};
  for (const auto& b : B) h0 = F.mul(h0, b);
  ModPoly s0, t0;
  F.xgcd(g0, h0, s0, t0);
  ZPoly g = from_mod(g0), h = from_mod(h0), s = from_mod(s0), t = from_mod(t0);
  Integer m = p;
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  multifactor_lift(g, A, F, steps, out);
  multifactor_lift(h, B, F, steps, out);
}

std::vector<std::uint64_t> candidate_primes() {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 101; primes.size() < 400; n += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) primes.push_back(n);
  }
  return primes;
}

bool divides_exactly(const ZPoly& g, const ZPoly& f) {
  QPoly qf = QPoly::from_integer(f), qg = QPoly::from_integer(g);
  return (qf % qg).is_zero();
}

std::vector<QPoly> zassenhaus(const ZPoly& f0) {
  const int n = static_cast<int>(f0.size()) - 1;
  if (n <= 1) return {QPoly::from_integer(f0).monic()};

  static const std::vector<std::uint64_t> primes = candidate_primes();
  std::size_t best_count = SIZE_MAX;
  std::uint64_t best_p = 0;
  int tried = 0;
  for (std::uint64_t p : primes) {
    Zp F{p};
    ModPoly fp = reduce_mod(f0, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    std::size_t count = 0;
    for (const auto& [g, d] : distinct_degree(F, F.monic(fp)))
      count += (g.size() - 1) / static_cast<std::size_t>(d);
    if (count < best_count) {
      best_count = count;
      best_p = p;
    }
    if (count == 1 || ++tried >= 5) break;
  }
  if (best_p == 0) fail(ErrorCode::kInternal, "no admissible prime for factorization");
  if (best_count == 1) return {QPoly::from_integer(f0).monic()};

  Zp F{best_p};
  std::mt19937_64 rng(0x5eedULL + best_p);
  std::vector<ModPoly> modular;
  for (const auto& [g, d] : distinct_degree(F, F.monic(reduce_mod(f0, best_p))))
    equal_degree(F, g, d, rng, modular);

  // Coefficient bound for lc * (any factor): |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f0) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(f0.back()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound = 2 * bound + 1;
  int steps = 0;
  Integer M(static_cast<unsigned long>(best_p));
  while (M <= bound) {
    M *= M;
    ++steps;
  }
  std::vector<ZPoly> lifted;
  multifactor_lift(f0, modular, F, steps, lifted);

  std::vector<QPoly> result;
  ZPoly f = f0;
  std::vector<ZPoly> remaining = lifted;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = zmod(zmul(g, remaining[i]), M);
      g = symmetric(g, M);
      std::vector<Integer> prim = QPoly::from_integer(g).primitive_integer();
      if (!prim.empty() && divides_exactly(prim, f)) {
        result.push_back(QPoly::from_integer(prim).monic());
        QPoly quotient = QPoly::from_integer(f).exact_div(QPoly::from_integer(prim));
        f = quotient.primitive_integer();
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
        remaining = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == remaining.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) result.push_back(QPoly::from_integer(f).monic());
  return result;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, "squarefree decomposition of zero");
  std::vector<QPoly> parts;
  QPoly a = p.monic();
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  if (c.is_zero()) c = QPoly(1);
  QPoly w = a.exact_div(c);
  QPoly y = b.exact_div(c);
  QPoly z = y - w.derivative();
  while (w.degree() > 0) {
    QPoly g = gcd(w, z);
    if (g.is_zero()) g = w;
    parts.push_back(g);
    w = w.exact_div(g);
    y = z.exact_div(g);
    z = y - w.derivative();
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

std::vector<QPoly> factor_squarefree_rational(const QPoly& p) {
  if (p.is_zero()) fail(ErrorCode::kZeroPolynomial, "factorization of zero");
  if (p.degree() <= 0) return {};
  std::vector<QPoly> out;
  QPoly q = p;
  // Strip powers of the variable first; the modular path needs f(0) != 0 only
  // for speed, not correctness.
  if (q.coeff(0) == 0) {
    out.push_back(QPoly::x());
    q = q.exact_div(QPoly::x());
  }
  if (q.degree() > 0) {
    auto f = zassenhaus(q.primitive_integer());
    out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<QFactor> factor_rational(const QPoly& p) {
  std::vector<QFactor> out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    for (auto& f : factor_squarefree_rational(parts[i]))
      out.push_back({std::move(f), static_cast<int>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return poly_less(a.factor, b.factor);
  });
  return out;
}

}  // namespace pjl
