#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

// Thrown when an enumeration or assembly would exceed its configured size
// guard.  Callers that genuinely want a larger computation raise the guard
// explicitly instead of the library silently grinding away.
struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace staircase
