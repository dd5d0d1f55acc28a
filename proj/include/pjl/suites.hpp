#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pjl/intersection.hpp"

namespace pjl {

// Seeded property suites shared by the verify command and the acceptance run.

struct SuiteResult {
  std::string name;
  int cases = 0;
  int passed = 0;
  std::vector<std::string> failures;  // first few, human readable
  std::string summary;
  double seconds = 0;
  bool ok() const { return cases > 0 && passed == cases; }
};

/// Monic in y, 2 <= deg_y <= max_y, deg_x <= max_x, small integer coefficients.
BiPoly random_monic_poly(std::mt19937_64& rng, int max_y, int max_x);

/// Polynomials of the split-formula and root-partition suites.
std::vector<BiPoly> split_suite_polys(std::uint64_t seed, int count);
/// Tame pairs of the Jacobian, chain-rule and extension-bound suites.
std::vector<TamePair> tame_suite_pairs(std::uint64_t seed, int count);

std::vector<std::string> suite_names();
/// Throws kNotFound for an unknown name. count <= 0 uses the suite default.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count, const ExpandOptions& options);

}  // namespace pjl
