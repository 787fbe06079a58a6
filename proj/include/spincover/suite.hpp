#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace spincover {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double ms = 0;          // measured, excluded from the JSON report
  double limit_ms = 0;
  std::vector<std::string> failures;
  nlohmann::json details;  // deterministic payload
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;

  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the full acceptance battery (criteria 1-10).
SuiteResult run_acceptance_suite();

// Deterministic JSON: no timings, key-sorted by construction.
nlohmann::json suite_to_json(const SuiteResult& r);

}  // namespace spincover
