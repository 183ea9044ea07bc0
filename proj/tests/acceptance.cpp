// Acceptance gate: runs every verification criterion at the default scale and
// prints one PASS/FAIL line per criterion.
#include <cstdio>

#include "fca/verify.hpp"

int main() {
  fca::SuiteOptions opt;  // exhaustive to 2x2 shapes, 500 seeded random contexts
  fca::SuiteResult res = fca::run_suite(opt);
  std::size_t passed = 0;
  for (const auto& c : res.criteria) {
    std::printf("%s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str());
    for (const auto& d : c.details) std::printf("     %s\n", d.c_str());
    if (c.passed) ++passed;
  }
  std::printf("%zu/%zu criteria passed\n", passed, res.criteria.size());
  return res.ok() ? 0 : 1;
}
