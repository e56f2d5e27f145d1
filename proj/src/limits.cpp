#include "loopfusion/limits.hpp"

#include <cstdlib>
#include <string>

namespace loopfusion {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("LOOPFUSION_MAX_BASIS")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v >= 1) limits.max_basis = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // unparsable override: keep the default
    }
  }
  return limits;
}

}  // namespace loopfusion
