#pragma once

#include <string>
#include <vector>

namespace qtoledo {

struct SelfTestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reference values: the printed constants, coordinates and patterns.
std::vector<SelfTestResult> run_selftest();

} // namespace qtoledo
