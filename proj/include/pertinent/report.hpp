#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace pertinent {

/// One verified claim: what was expected, what was computed, and whether they agree.
struct CheckRecord {
  std::string instance;
  std::string claimed;
  std::string computed;
  bool pass = false;
};

inline CheckRecord make_check(std::string instance, std::string claimed, std::string computed) {
  const bool pass = claimed == computed;
  return {std::move(instance), std::move(claimed), std::move(computed), pass};
}

inline bool all_pass(const std::vector<CheckRecord>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

}  // namespace pertinent
