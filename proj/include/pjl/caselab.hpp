#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pjl/rational.hpp"

namespace pjl {

/// Degree-pair data for a hypothetical counterexample, taken as trusted input.
struct MohCaseData {
  std::string name;  // "99x66"
  long n = 0, m = 0;
  long M2 = 0, M3 = 0, V3 = 0, V2 = 0;
  Rational delta2, delta1;
  /// Roots of f_sigma at the major pi-root with split order delta2.
  long sigma2_roots = 0;
  /// f-roots through each final major pi-root, also the size of a major block.
  long major_final_size = 0;
  /// f-multiplicity of the principal minor roots.
  long principal_minor = 0;
  bool principal_may_split = true;
  /// Distinct roots allowed at a splitting pi-root of the principal minor roots.
  long u_s = 0;
  std::optional<long> d_s;
  long max_order = 10;
  long max_denominator = 3;
};

/// Throws kInvalidArgument with the first violated condition.
void validate_case(const MohCaseData& c);

std::vector<MohCaseData> builtin_cases();
/// Accepts "99x66" or "99,66". Throws kNotFound.
MohCaseData find_case(const std::string& key);

enum class BranchKind { kMajor, kMinor };

/// One orbit of conjugate final pi-roots.
struct Branch {
  long f_mult = 0;
  long g_mult = 0;
  long conj = 0;
  BranchKind kind = BranchKind::kMinor;
  Rational delta;  // split order of the final pi-root
  long D = 0;      // f-roots through it
};

struct SplitPattern {
  std::vector<long> sigma2_blocks;  // multiplicities of (pi^q - c) blocks, descending
  std::optional<Rational> principal_split;
  std::vector<long> principal_parts;  // multiplicity per distinct root, descending
  std::vector<Branch> branches;
  std::string descriptor;
};

/// All patterns under the case budgets, in deterministic order.
std::vector<SplitPattern> enumerate_patterns(const MohCaseData& c);

/// 1 + sum over final minor roots of (delta - 1)
Rational eval_minor_route(const SplitPattern& p);
/// n/(m+n) sum over final major roots of |D| (1 - delta)
Rational eval_major_route(const SplitPattern& p, long n, long m);

struct PatternVerdict {
  SplitPattern pattern;
  Rational i_minor, i_major;
  bool contradiction = false;
  bool obstructed = false;  // principal minor roots split at order 1
};

struct CaseVerdict {
  MohCaseData data;
  bool obstruction_applied = false;
  std::vector<PatternVerdict> patterns;
  std::vector<std::size_t> arithmetic_survivors;  // equal routes
  std::vector<std::size_t> survivors;             // equal routes and not obstructed
};

CaseVerdict analyze(const MohCaseData& c, bool apply_obstruction);

}  // namespace pjl
