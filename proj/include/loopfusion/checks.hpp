#pragma once

#include <string>
#include <vector>

namespace loopfusion {

// One verified identity: the residual and the tolerance it was held to.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline Check make_check(std::string name, double residual, double tolerance) {
  return Check{std::move(name), residual, tolerance, residual < tolerance};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace loopfusion
