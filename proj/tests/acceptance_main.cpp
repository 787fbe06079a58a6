// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "spincover/suite.hpp"

int main() {
  spincover::SuiteResult res = spincover::run_acceptance_suite();
  for (const auto& c : res.criteria) {
    std::printf("%s criterion %2d: %s (%.0f ms, limit %.0f ms)\n",
                c.pass ? "PASS" : "FAIL", c.number, c.name.c_str(), c.ms, c.limit_ms);
    for (const auto& f : c.failures) std::printf("     - %s\n", f.c_str());
  }
  std::printf("%s\n", res.all_pass() ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return res.all_pass() ? 0 : 1;
}
