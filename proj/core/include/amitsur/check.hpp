#pragma once

#include <string>
#include <vector>

namespace amitsur {

// Outcome of one named exact check. Verification routines collect these
// instead of throwing so that a report can list every failure.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace amitsur
