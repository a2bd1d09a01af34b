#pragma once

#include <stdexcept>
#include <string>

namespace qrd {

// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside an operation's domain (bad prime, bad bound, ...).
struct domain_error : error {
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// A tuple violating one of the structural invariants; the message names it.
struct invalid_tuple_error : domain_error {
  explicit invalid_tuple_error(const std::string& msg) : domain_error(msg) {}
};

// An enumeration would exceed the configured size caps.
struct size_limit_error : error {
  explicit size_limit_error(const std::string& msg) : error(msg) {}
};

// A table would exceed the configured memory budget.
struct resource_error : error {
  explicit resource_error(const std::string& msg) : error(msg) {}
};

// Cross-checks that can only fail on an implementation bug.
struct internal_error : error {
  explicit internal_error(const std::string& msg) : error(msg) {}
};

}  // namespace qrd
