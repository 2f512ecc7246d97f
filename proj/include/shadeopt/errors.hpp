#pragma once

#include <stdexcept>
#include <string>

namespace shadeopt {

/// Bad or inconsistent input data (files, CSV rows, parameter ranges). CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Infeasible placement or insufficient capacity for the requested tree count. CLI exit code 3.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Broken internal invariant. CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace shadeopt
