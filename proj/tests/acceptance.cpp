// Acceptance run: one line per criterion, exit status 1 if any is red.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "pjl/error.hpp"
#include "pjl/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  int count;
  double budget_seconds;
};

const std::vector<Criterion> kCriteria = {
    {1, "split formula equals deg Res(f - xi, f_y)", "split-formula", 100, 300},
    {2, "root-order route equals resultant route", "route-agreement", 100, 120},
    {3, "Jacobian pair suite on tame pairs", "jacobian-pairs", 30, 600},
    {4, "chain-rule residual vanishes to order 10", "chain-rule", 30, 600},
    {5, "case 75x50 reproduces (4, 8) and (6, 4)", "case-75x50", 1, 1},
    {6, "case 99x66 survivor and obstruction", "case-99x66", 1, 10},
    {7, "semigroup lemma on generated sequences", "semigroup-lemma", 40, 60},
    {8, "special ODE solutions factor and plug back", "special-ode", 3, 60},
    {9, "root partition multisets agree", "root-partition", 100, 300},
    {10, "I(f_xi, g) < mn/(m+n) on tame pairs", "extension-bound", 30, 60},
};

}  // namespace

int main() {
  std::uint64_t seed = 20240611;
  if (const char* s = std::getenv("PJL_SEED")) seed = std::strtoull(s, nullptr, 10);
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));

  int failed = 0;
  for (const auto& c : kCriteria) {
    pjl::SuiteResult r;
    std::string error;
    try {
      r = pjl::run_suite(c.suite, seed, c.count, pjl::ExpandOptions{});
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool in_time = r.seconds <= c.budget_seconds;
    const bool pass = error.empty() && r.ok() && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%d/%d, %.2fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.title, r.passed,
                r.cases, r.seconds, in_time ? "" : " over time budget");
    if (!r.summary.empty()) std::printf("      %s\n", r.summary.c_str());
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    for (const auto& f : r.failures) std::printf("      failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
  return failed == 0 ? 0 : 1;
}
