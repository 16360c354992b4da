#pragma once

#include <stdexcept>
#include <string>

namespace shotrng {

// Domain errors reuse std::domain_error.  The remaining categories mirror
// the CLI exit codes and the C API status values.

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

class estimation_error : public std::runtime_error {
 public:
  explicit estimation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shotrng
