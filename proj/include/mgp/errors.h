#pragma once

#include <stdexcept>
#include <string>

namespace mgp {

// Bad files, malformed missions, invalid configuration. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Planning could not satisfy the mission (unreachable pair, disconnected
// target, size limits). CLI exit code 3.
class PlanningError : public std::runtime_error {
 public:
  explicit PlanningError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mgp
