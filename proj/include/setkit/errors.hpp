#pragma once

#include <stdexcept>
#include <string>

namespace setkit {

// Malformed input: expression text, relation files, unknown names.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A fuel, search-window or size limit ran out before the answer was
// decided.  Distinct from a property being refuted.
struct limit_error : std::runtime_error {
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace setkit
