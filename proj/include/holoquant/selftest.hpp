#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace holoquant {

struct CheckResult {
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual <= tolerance; }
};

struct Check {
  std::string module;
  std::string name;
  std::string description;
  std::function<CheckResult()> run;
};

const std::vector<Check>& selftest_registry();

// Runs every check whose "module.name" contains `filter`; prints one row per
// check and returns the number of failures.
int run_selftest(std::ostream& out, const std::string& filter = "");

}  // namespace holoquant
