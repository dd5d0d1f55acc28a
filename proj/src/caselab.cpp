#include "pjl/caselab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pjl/error.hpp"

namespace pjl {

namespace {

long den_of(const Rational& r) { return r.get_den().get_si(); }

// Denominator of x * q: the ramification still needed below an orbit of q conjugates.
long lattice_den(const Rational& x, long q) { return den_of(Rational(x * q)); }

// Proportionality step: f-multiplicities of shared roots are multiples of m / gcd(m, n).
long mult_step(const MohCaseData& c) { return c.m / std::gcd(c.m, c.n); }

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Partitions of total into parts that are multiples of step, descending, in
// reverse lexicographic order.
void partitions(long total, long step, long max_part, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(max_part, total) / step * step; p >= step; p -= step) {
    cur.push_back(p);
    partitions(total - p, step, p, cur, out);
    cur.pop_back();
  }
}

struct MajorSide {
  std::vector<long> blocks;
  std::vector<Branch> branches;
};

std::vector<MajorSide> major_sides(const MohCaseData& c) {
  const long q = den_of(c.delta2);
  const long step = mult_step(c);
  std::vector<std::vector<long>> parts;
  std::vector<long> cur;
  partitions(c.sigma2_roots / q, step, c.sigma2_roots / q, cur, parts);
  std::vector<MajorSide> out;
  for (const auto& blocks : parts) {
    if (std::find(blocks.begin(), blocks.end(), c.major_final_size) == blocks.end()) continue;
    MajorSide side{blocks, {}};
    bool ok = true;
    for (long k : blocks) {
      Branch b;
      b.f_mult = k;
      b.g_mult = k * c.n / c.m;
      b.conj = q;
      b.D = k;
      if (k == c.major_final_size) {
        b.kind = BranchKind::kMajor;
        b.delta = c.delta1;
      } else {
        // The final minor order where the f-orders of all other roots cancel.
        b.kind = BranchKind::kMinor;
        b.delta = Rational(Rational(c.principal_minor - (c.sigma2_roots - k) * c.delta2) / k);
        if (b.delta <= 1 || b.delta <= c.delta2) ok = false;
      }
      side.branches.push_back(b);
    }
    if (ok) out.push_back(std::move(side));
  }
  return out;
}

struct PrincipalSide {
  std::optional<Rational> split;
  std::vector<long> parts;
  std::vector<Branch> branches;
  std::string descriptor;
};

Branch principal_branch(const MohCaseData& c, long f_mult, long conj, const Rational& delta) {
  Branch b;
  b.f_mult = f_mult;
  b.g_mult = f_mult * c.n / c.m;
  b.conj = conj;
  b.kind = BranchKind::kMinor;
  b.delta = delta;
  b.D = f_mult;
  return b;
}

// Orbits of `den` conjugate roots with equal multiplicity, multiplicities
// descending, 2 <= distinct roots <= u.
std::vector<std::vector<long>> orbit_splits(long k, long u, long step, long den) {
  std::vector<std::vector<long>> out;
  for (long orbits = 1; orbits * den <= u; ++orbits) {
    if (orbits * den < 2) continue;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long mx) {
      if (static_cast<long>(cur.size()) == orbits) {
        if (rem == 0) out.push_back(cur);
        return;
      }
      for (long v = std::min(mx, rem); v >= 1; --v) {
        if (v % step != 0 || den * v > rem) continue;
        cur.push_back(v);
        rec(rem - den * v, v);
        cur.pop_back();
      }
    };
    rec(k, k);
  }
  return out;
}

std::vector<PrincipalSide> principal_sides(const MohCaseData& c) {
  const long k = c.principal_minor;
  const long others = c.m - k;  // every other root separates from the principal ones at order -1
  std::vector<PrincipalSide> out;

  const Rational unsplit(frac(others, k));
  if (!c.principal_may_split || (unsplit > 1 && den_of(unsplit) <= c.u_s)) {
    PrincipalSide p;
    p.branches.push_back(principal_branch(c, k, 1, unsplit));
    p.parts = {k};
    p.descriptor = "final(" + to_string(unsplit) + ")";
    out.push_back(p);
  }
  if (!c.principal_may_split) return out;

  const long step = mult_step(c);
  for (long den = 1; den <= c.max_denominator; ++den) {
    for (long j = den; j <= c.max_order * den; ++j) {
      const Rational s(frac(j, den));
      if (den_of(s) != den) continue;
      for (const auto& orbit_mults : orbit_splits(k, c.u_s, step, den)) {
        PrincipalSide p;
        p.split = s;
        bool ok = true;
        std::string finals;
        for (long v : orbit_mults) {
          const Rational delta(Rational(others - (k - v) * s) / v);
          if (!(delta > s && v > 1 && lattice_den(delta, den) <= c.u_s)) {
            ok = false;
            break;
          }
          p.branches.push_back(principal_branch(c, v, den, delta));
          for (long i = 0; i < den; ++i) {
            p.parts.push_back(v);
            finals += (finals.empty() ? "" : ",") + to_string(delta);
          }
        }
        if (!ok) continue;
        p.descriptor = "split(" + to_string(s) + ";" + join(p.parts) + ";" + finals + ")";
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace

void validate_case(const MohCaseData& c) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::kInvalidArgument, "invalid case data: " + what);
  };
  need(c.m > 0 && c.n > c.m, "0 < m < n");
  need(c.delta2 > 0 && c.delta2 < c.delta1 && c.delta1 < 1, "0 < delta2 < delta1 < 1");
  need(c.sigma2_roots > 0 && c.sigma2_roots % den_of(c.delta2) == 0,
       "roots at sigma2 must be a positive multiple of den(delta2)");
  need(c.principal_minor > 0 && c.sigma2_roots + c.principal_minor == c.m,
       "roots at sigma2 plus principal minor roots must equal m");
  need(c.major_final_size > 0 && c.major_final_size % mult_step(c) == 0,
       "major final size must be a positive multiple of m / gcd(m, n)");
  need(c.principal_minor % mult_step(c) == 0, "principal minor multiplicity must respect m : n");
  need(c.u_s >= 1 && c.max_order >= 1 && c.max_denominator >= 1, "positive enumeration bounds");
  if (c.d_s) need(*c.d_s > c.u_s, "d_s > u_s");
}

std::vector<MohCaseData> builtin_cases() {
  MohCaseData a;
  a.name = "75x50";
  a.n = 75;
  a.m = 50;
  a.M2 = 55;
  a.M3 = 73;
  a.V3 = 4;
  a.V2 = 2;
  a.delta2 = frac(1, 5);
  a.delta1 = frac(2, 3);
  a.sigma2_roots = 40;
  a.major_final_size = 4;
  a.principal_minor = 10;
  a.principal_may_split = false;
  a.u_s = 3;

  MohCaseData b;
  b.name = "99x66";
  b.n = 99;
  b.m = 66;
  b.M2 = 77;
  b.M3 = 97;
  b.V3 = 8;
  b.V2 = 8;
  b.delta2 = frac(1, 3);
  b.delta1 = frac(4, 9);
  b.sigma2_roots = 48;
  b.major_final_size = 16;
  b.principal_minor = 18;
  b.principal_may_split = true;
  b.u_s = 3;
  b.d_s = 11;
  return {a, b};
}

MohCaseData find_case(const std::string& key) {
  std::string k = key;
  std::replace(k.begin(), k.end(), ',', 'x');
  k.erase(std::remove(k.begin(), k.end(), ' '), k.end());
  k.erase(std::remove(k.begin(), k.end(), '('), k.end());
  k.erase(std::remove(k.begin(), k.end(), ')'), k.end());
  for (const auto& c : builtin_cases())
    if (c.name == k) return c;
  fail(ErrorCode::kNotFound, "no built-in case data for " + key);
}

std::vector<SplitPattern> enumerate_patterns(const MohCaseData& c) {
  validate_case(c);
  std::vector<SplitPattern> out;
  const auto majors = major_sides(c);
  const auto principals = principal_sides(c);
  for (const auto& mj : majors) {
    for (const auto& pr : principals) {
      SplitPattern p;
      p.sigma2_blocks = mj.blocks;
      p.principal_split = pr.split;
      p.principal_parts = pr.parts;
      p.branches = mj.branches;
      p.branches.insert(p.branches.end(), pr.branches.begin(), pr.branches.end());
      p.descriptor = "sigma2(" + join(mj.blocks) + ") principal " + pr.descriptor;
      out.push_back(std::move(p));
    }
  }
  return out;
}

Rational eval_minor_route(const SplitPattern& p) {
  Rational v = 1;
  for (const auto& b : p.branches)
    if (b.kind == BranchKind::kMinor) v += b.conj * (b.delta - 1);
  return v;
}

Rational eval_major_route(const SplitPattern& p, long n, long m) {
  Rational v = 0;
  for (const auto& b : p.branches)
    if (b.kind == BranchKind::kMajor) v += b.conj * b.D * (1 - b.delta);
  return Rational(v * frac(n, m + n));
}

CaseVerdict analyze(const MohCaseData& c, bool apply_obstruction) {
  CaseVerdict v;
  v.data = c;
  v.obstruction_applied = apply_obstruction;
  for (auto& p : enumerate_patterns(c)) {
    PatternVerdict pv;
    pv.i_minor = eval_minor_route(p);
    pv.i_major = eval_major_route(p, c.n, c.m);
    pv.contradiction = pv.i_minor != pv.i_major;
    pv.obstructed = p.principal_split && *p.principal_split == 1;
    pv.pattern = std::move(p);
    const std::size_t idx = v.patterns.size();
    if (!pv.contradiction) {
      v.arithmetic_survivors.push_back(idx);
      if (!(apply_obstruction && pv.obstructed)) v.survivors.push_back(idx);
    }
    v.patterns.push_back(std::move(pv));
  }
  return v;
}

}  // namespace pjl
