#pragma once

#include <string>
#include <vector>

namespace diagcat {

struct CheckResult {
  std::string check;
  std::string params;
  std::string expected;
  std::string got;
  bool pass = false;
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& report) {
  for (const auto& c : report)
    if (!c.pass) return false;
  return !report.empty();
}

}  // namespace diagcat
