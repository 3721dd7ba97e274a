#pragma once

#include <stdexcept>
#include <string>

namespace deds {

// Malformed input: bad files, violated preconditions, out-of-range ids.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured work or memory ceiling was hit. Distinct from "no solution".
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deds
