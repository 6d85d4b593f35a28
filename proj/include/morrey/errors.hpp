#pragma once

#include <stdexcept>
#include <string>

namespace morrey {

// Malformed user input: bad config documents, parameter domain violations.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A computed result violated an internal consistency guarantee.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace morrey
