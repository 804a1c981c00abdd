#pragma once

#include <stdexcept>
#include <string>

namespace areg {

// Precondition violations on public entry points.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed its configured budget.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, std::string bound)
      : std::runtime_error(what + " (bound attempted: " + bound + ")"),
        bound_attempted(std::move(bound)) {}
  std::string bound_attempted;
};

// A pipeline stage failed to meet its contract; carries telemetry as text.
class pipeline_error : public std::runtime_error {
 public:
  pipeline_error(const std::string& what, std::string telemetry_json)
      : std::runtime_error(what), telemetry(std::move(telemetry_json)) {}
  std::string telemetry;
};

}  // namespace areg
