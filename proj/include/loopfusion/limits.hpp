#pragma once

#include <cstddef>

namespace loopfusion {

struct Limits {
  std::size_t max_basis = 5000;
  std::size_t max_tuples = 1'000'000;

  // Defaults, with max_basis overridden by LOOPFUSION_MAX_BASIS when set.
  static Limits from_environment();
};

struct Tolerances {
  double unitarity = 1e-9;
  double integrality = 1e-6;
  double identity = 1e-8;
};

}  // namespace loopfusion
