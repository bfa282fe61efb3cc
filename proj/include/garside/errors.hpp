#pragma once

#include <stdexcept>
#include <string>

namespace garside {

// Bad command line arguments, malformed keys or JSON. CLI exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical invariant failed (invalid object, unsound relation,
// postcondition violation). CLI exit code 1.
struct PropertyViolation : std::runtime_error {
  explicit PropertyViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// A resource cap was hit (reversing steps, node or class limits). The
// computation is abandoned, never silently truncated. CLI exit code 3.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Word reversing ran past its step cap, so the derived operation (equality,
// divisibility, join, meet) has no answer. A cap condition, CLI exit code 3.
struct Divergence : CapExceeded {
  explicit Divergence(const std::string& msg) : CapExceeded(msg) {}
};

}  // namespace garside
