#pragma once

#include <string>
#include <vector>

namespace ariki {

// Rank limits for each family of checks.
struct VerifyCaps {
  int counting = 6;
  int regular = 8;
  int a_oracle = 5;
  int invariance = 4;
  int divided = 4;
  int minimality = 5;
  int canonical = 5;
  int typeB = 5;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the invariant suite over the standard parameter grid.
std::vector<CheckResult> run_verify(const VerifyCaps& caps);

}  // namespace ariki
