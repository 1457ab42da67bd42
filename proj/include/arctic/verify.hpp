#pragma once

#include <string>
#include <vector>

#include "arctic/mp.hpp"

namespace arctic {

struct CheckResult {
  std::string name;
  std::string computed;
  std::string reference;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// counts, recursions, closed_forms, sum_rules, saddles, curves,
// asymptotic_convergence.
std::vector<std::string> verify_suite_names();

SuiteReport run_verify_suite(const std::string& name);

}  // namespace arctic
