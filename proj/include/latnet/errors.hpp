#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latnet {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by loaders when a well-formed document fails semantic validation.
// The full report is kept so callers can print every violation, not just one.
struct ValidationError : std::runtime_error {
  std::vector<std::string> report;
  explicit ValidationError(std::vector<std::string> r)
      : std::runtime_error(r.empty() ? "validation failed" : r.front()),
        report(std::move(r)) {}
};

}  // namespace latnet
