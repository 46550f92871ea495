#pragma once

#include <string>
#include <vector>

namespace pdeforge {

enum class Suite { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

struct SelftestReport {
  bool pass = false;
  std::vector<CriterionResult> results;
  double total_millis = 0.0;
};

// Bundled verification suite: the quick suite runs every criterion at a
// reduced scale, the full suite at the documented scales and tolerances.
SelftestReport run_selftest(Suite suite, unsigned long seed = 0);

}  // namespace pdeforge
