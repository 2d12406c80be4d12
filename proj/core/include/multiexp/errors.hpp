#pragma once

#include <stdexcept>
#include <string>

namespace multiexp {

// Invalid configuration or operation inputs. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative routine exhausted its iteration cap without meeting tolerance.
// Must not occur for valid inputs. The CLI maps this to exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace multiexp
