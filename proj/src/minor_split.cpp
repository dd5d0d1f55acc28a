#include "pjl/minor_split.hpp"

#include <algorithm>
#include <numeric>

#include "pjl/error.hpp"

namespace pjl {

DeltaSequence derive_dqM(const std::vector<long>& delta) {
  if (delta.empty()) fail(ErrorCode::kInvalidArgument, "empty delta sequence");
  for (long v : delta)
    if (v <= 0) fail(ErrorCode::kInvalidArgument, "delta sequence entries must be positive");
  long g = 0;
  for (long v : delta) g = std::gcd(g, v);
  if (g != 1) fail(ErrorCode::kInvalidArgument, "delta sequence entries must have gcd 1");

  DeltaSequence s;
  s.delta = delta;
  const int h = s.h();
  s.d.assign(static_cast<std::size_t>(h) + 2, 0);
  long acc = 0;
  for (int i = 1; i <= h + 1; ++i) {
    acc = std::gcd(acc, delta[static_cast<std::size_t>(i - 1)]);
    s.d[static_cast<std::size_t>(i)] = acc;
  }
  s.q.assign(static_cast<std::size_t>(h) + 1, 0);
  s.M.assign(static_cast<std::size_t>(h) + 1, 0);
  if (h >= 1) s.M[1] = -delta[1];
  for (int i = 2; i <= h; ++i) {
    auto u = static_cast<std::size_t>(i);
    s.q[u] = delta[u - 1] * s.d[u - 1] / s.d[u] - delta[u];
    s.M[u] = s.M[u - 1] + s.q[u];
  }
  return s;
}

Validity validate(const DeltaSequence& s, bool strict) {
  const int h = s.h();
  if (h < 1) return {false, "need at least two entries"};
  if (s.d[static_cast<std::size_t>(h) + 1] != 1) return {false, "d_{h+1} != 1"};
  if (!strict) return {};
  for (int i = 1; i <= h; ++i) {
    auto u = static_cast<std::size_t>(i);
    if (s.d[u + 1] >= s.d[u]) return {false, "d is not strictly decreasing at " + std::to_string(i)};
  }
  for (int i = 2; i <= h; ++i)
    if (s.q[static_cast<std::size_t>(i)] < 1) return {false, "q_" + std::to_string(i) + " < 1"};
  for (int i = 1; i <= h; ++i) {
    auto u = static_cast<std::size_t>(i);
    std::vector<long> gens(s.delta.begin(), s.delta.begin() + i);
    if (!semigroup_member(s.delta[u] * (s.d[u] / s.d[u + 1]), gens))
      return {false, "semigroup condition fails at " + std::to_string(i)};
  }
  return {};
}

bool semigroup_member(long target, const std::vector<long>& generators) {
  if (target < 0) return false;
  if (target == 0) return true;
  for (long g : generators)
    if (g <= 0) fail(ErrorCode::kInvalidArgument, "semigroup generators must be positive");
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (long v = 1; v <= target; ++v) {
    for (long g : generators) {
      if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

std::pair<bool, bool> semigroup_lemma_check(const DeltaSequence& s, int k) {
  if (k < 2 || k > s.h())
    fail(ErrorCode::kIndexOutOfRange, "k must satisfy 2 <= k <= h = " + std::to_string(s.h()));
  const auto u = static_cast<std::size_t>(k);
  const long t = s.delta[u] + s.M[u];
  std::vector<long> tail(s.delta.begin() + 1, s.delta.begin() + k);
  std::vector<long> head(s.delta.begin(), s.delta.begin() + k);
  return {semigroup_member(t, tail), !semigroup_member(t - s.delta[0], head)};
}

std::vector<DeltaSequence> generate_delta_sequences(std::mt19937_64& rng, int count, int max_h, long max_entry) {
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::vector<DeltaSequence> out;
  while (static_cast<int>(out.size()) < count) {
    const int h = static_cast<int>(pick(2, max_h));
    // Divisor chain d_1 > d_2 > ... > d_{h+1} = 1 built from random prime factors.
    std::vector<long> chain{1};
    const long primes[] = {2, 3, 5};
    for (int i = 0; i < h; ++i) chain.push_back(chain.back() * primes[pick(0, 2)]);
    std::reverse(chain.begin(), chain.end());  // chain[i] = d_{i+1}
    if (chain.front() > max_entry) continue;
    std::vector<long> delta{chain[0]};
    bool ok = true;
    for (int i = 1; i <= h && ok; ++i) {
      const long dn = chain[static_cast<std::size_t>(i)];
      const long dp = chain[static_cast<std::size_t>(i - 1)];
      std::vector<long> candidates;
      for (long v = dn; v <= max_entry; v += dn) {
        if (std::gcd(dp, v) != dn) continue;
        if (i >= 2) {
          const long prev = delta.back() * chain[static_cast<std::size_t>(i - 2)] / dp;
          if (v >= prev) continue;
        }
        if (!semigroup_member(v * (dp / dn), delta)) continue;
        candidates.push_back(v);
      }
      if (candidates.empty()) {
        ok = false;
      } else {
        delta.push_back(candidates[static_cast<std::size_t>(pick(0, static_cast<long>(candidates.size()) - 1))]);
      }
    }
    if (!ok) continue;
    DeltaSequence s = derive_dqM(delta);
    if (validate(s, true).ok) out.push_back(std::move(s));
  }
  return out;
}

UniPoly wronskian_d(long a, long b, const UniPoly& p, const UniPoly& q) {
  const FieldPtr& k = p.field()->is_rationals() ? q.field() : p.field();
  const FieldElement fa(k, Rational(a)), fb(k, Rational(b));
  return p * q.derivative() * fa - p.derivative() * q * fb;
}

namespace {

// Reduced row echelon form over the field; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<FieldElement>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const FieldElement inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

OdeSolution solve_special_ode(const UniPoly& p, int l, const FieldElement& c, int m) {
  if (m < 1 || p.degree() != m) fail(ErrorCode::kPrecondition, "deg p must equal m >= 1");
  if (l < 2) fail(ErrorCode::kPrecondition, "l must be at least 2");
  if (c.is_zero()) fail(ErrorCode::kPrecondition, "c must be nonzero");
  const FieldPtr K = p.field()->is_rationals() ? c.field() : p.field();
  const auto lu = static_cast<unsigned>(l);
  const std::size_t unknowns = static_cast<std::size_t>((l - 1) * m + 2);
  const std::size_t equations = static_cast<std::size_t>(l * m + 1);
  const UniPoly rhs = p.pow(lu) * c;

  // Column j is D applied to pi^j.
  std::vector<std::vector<FieldElement>> rows(equations,
                                              std::vector<FieldElement>(unknowns + 1, FieldElement(K, Rational(0))));
  for (std::size_t j = 0; j < unknowns; ++j) {
    std::vector<FieldElement> mono(j + 1, FieldElement(K, Rational(0)));
    mono[j] = FieldElement(K, Rational(1));
    UniPoly col = wronskian_d(m, static_cast<long>(m) * (l - 1), p, UniPoly(K, mono));
    for (std::size_t i = 0; i < col.coeffs().size(); ++i) {
      if (i >= equations) fail(ErrorCode::kInternal, "operator raised the degree beyond l m");
      rows[i][j] = col.coeffs()[i];
    }
  }
  for (std::size_t i = 0; i < rhs.coeffs().size(); ++i) rows[i][unknowns] = rhs.coeffs()[i];

  std::vector<std::size_t> pivots = rref(rows, unknowns + 1);
  if (!pivots.empty() && pivots.back() == unknowns)
    fail(ErrorCode::kNoSolution, "the linear system for q is inconsistent");
  OdeSolution sol;
  sol.kernel_dimension = static_cast<int>(unknowns - pivots.size());
  std::vector<FieldElement> qc(unknowns, FieldElement(K, Rational(0)));
  for (std::size_t r = 0; r < pivots.size(); ++r) qc[pivots[r]] = rows[r][unknowns];
  sol.q = UniPoly(K, qc);

  if (!(wronskian_d(m, static_cast<long>(m) * (l - 1), p, sol.q) == rhs))
    fail(ErrorCode::kInternal, "plug-back identity failed");
  const UniPoly base = p.pow(lu - 1);
  auto [lin, rem] = sol.q.divmod(base);
  const FieldElement lead = c / FieldElement(K, Rational(m));
  if (!rem.is_zero() || lin.degree() != 1 || !(lin.lc() == lead))
    fail(ErrorCode::kInternal, "q is not of the form (c/m)(pi - a) p^(l-1)");
  sol.a = -(lin.coeff(0) / lead);
  return sol;
}

long MuSequence::d(int i) const {
  long g = 0;
  for (int j = 0; j < i; ++j) g = std::gcd(g, degrees.at(static_cast<std::size_t>(j)));
  return g;
}

DeltaSequence MuSequence::normalized() const {
  if (degrees.size() < 3) fail(ErrorCode::kInvalidArgument, "mu sequence needs s >= 2");
  const long g = d(s() + 1);
  std::vector<long> v;
  for (long x : degrees) {
    if (x <= 0) fail(ErrorCode::kInvalidArgument, "degrees -mu_i must be positive");
    v.push_back(x / g);
  }
  return derive_dqM(v);
}

bool obstruction_check(const MuSequence& mu) {
  DeltaSequence s = mu.normalized();
  Validity v = validate(s, true);
  if (!v.ok) fail(ErrorCode::kInvalidArgument, "normalized mu sequence is not a delta sequence: " + v.reason);
  if (mu.n != mu.degrees[0]) fail(ErrorCode::kInvalidArgument, "n must equal -mu_0");
  if (mu.u_s + mu.v_s != mu.d(mu.s())) fail(ErrorCode::kInvalidArgument, "u_s + v_s must equal d_s");
  const long scale = mu.d(mu.s() + 1);
  const long target = mu.degrees.back() + s.M[static_cast<std::size_t>(s.h())] * scale - mu.n;
  std::vector<long> gens(mu.degrees.begin(), mu.degrees.end() - 1);
  return !semigroup_member(target, gens);
}

}  // namespace pjl
