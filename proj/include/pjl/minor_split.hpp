#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pjl/unipoly.hpp"

namespace pjl {

// Characteristic sequences and the semigroup obstruction.

/// delta_0..delta_h with its derived sequences. Vectors are indexed as in
/// the usual notation; unused slots hold 0.
struct DeltaSequence {
  std::vector<long> delta;
  std::vector<long> d;  // d[i] = gcd(delta_0..delta_{i-1}), 1 <= i <= h+1
  std::vector<long> q;  // q[i] = delta_{i-1} d_{i-1}/d_i - delta_i, 2 <= i <= h
  std::vector<long> M;  // M[1] = -delta_1, M[i] = M[i-1] + q[i]

  int h() const { return static_cast<int>(delta.size()) - 1; }
};

/// Requires positive entries with gcd 1.
DeltaSequence derive_dqM(const std::vector<long>& delta);

struct Validity {
  bool ok = true;
  std::string reason;
};
/// Loose checks: h >= 1 and d_{h+1} = 1. Strict adds strictly decreasing d,
/// q_i >= 1 and (d_i/d_{i+1}) delta_i in the semigroup of delta_0..delta_{i-1}.
Validity validate(const DeltaSequence& s, bool strict);

/// target is a nonnegative integer combination of the generators.
bool semigroup_member(long target, const std::vector<long>& generators);

/// (delta_k + M_k in the semigroup of delta_1..delta_{k-1},
///  delta_k + M_k - delta_0 not in the semigroup of delta_0..delta_{k-1}).
std::pair<bool, bool> semigroup_lemma_check(const DeltaSequence& s, int k);

/// Random strictly valid sequences with 2 <= h <= max_h and entries <= max_entry.
std::vector<DeltaSequence> generate_delta_sequences(std::mt19937_64& rng, int count, int max_h,
                                                    long max_entry);

/// a p q' - b p' q
UniPoly wronskian_d(long a, long b, const UniPoly& p, const UniPoly& q);

struct OdeSolution {
  UniPoly q;
  FieldElement a;
  int kernel_dimension = 0;
};
/// Solves D(m, m(l-1), p, q) = c p^l for q of degree (l-1)m + 1, with the
/// kernel direction p^(l-1) fixed by setting free unknowns to zero. Checks
/// q = (c/m)(pi - a) p^(l-1) and the plug-back identity.
OdeSolution solve_special_ode(const UniPoly& p, int l, const FieldElement& c, int m);

/// Degrees D_i = -mu_i of the quasi-approximate roots, D_0 = n, D_1 = m.
struct MuSequence {
  std::vector<long> degrees;
  long n = 0;
  long m = 0;
  long u_s = 0;
  long v_s = 0;

  int s() const { return static_cast<int>(degrees.size()) - 1; }
  /// d_i = gcd(D_0..D_{i-1}).
  long d(int i) const;
  /// degrees / d_{s+1}
  DeltaSequence normalized() const;
};

/// D_s + M_s d_{s+1} - n is not in the semigroup of D_0..D_{s-1}. Throws
/// on an invalid sequence.
bool obstruction_check(const MuSequence& mu);

}  // namespace pjl
