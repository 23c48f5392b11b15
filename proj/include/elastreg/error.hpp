#pragma once

#include <stdexcept>
#include <string>

namespace elastreg {

// Exception categories map 1:1 onto CLI exit codes:
// invalid parameters/usage -> 1, file I/O -> 2, numeric/data errors -> 3.
struct InvalidParameter : std::invalid_argument {
  explicit InvalidParameter(const std::string& msg) : std::invalid_argument(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GridMismatch : NumericError {
  explicit GridMismatch(const std::string& msg) : NumericError(msg) {}
};

}  // namespace elastreg
