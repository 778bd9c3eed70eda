#pragma once

// Replays the worked examples every module is anchored on.

#include <string>
#include <vector>

namespace tlab {

struct VerifyItem {
  std::string name;
  bool passed = false;
  std::string detail;  // observed value, or the exception text
};

std::vector<VerifyItem> run_verification();

}  // namespace tlab
