#pragma once

#include <stdexcept>
#include <string>

namespace loopfusion {

// Bad caller input: invalid rank/level, unknown weight, mixed contexts.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed quantity failed an identity it must satisfy. Almost always
// means a convention mismatch somewhere upstream.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loopfusion
