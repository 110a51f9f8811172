#ifndef TROPIC_ERRORS_HPP
#define TROPIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropic {

// Malformed input: bad JSON shape, unknown ids, unparsable rationals.
struct schema_error : std::runtime_error {
  explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that violates a precondition of an operation
// (point with infinite offset, divisor supported at infinity, target
// not a tree, non-principal pair, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search exceeded its configured budget.  Never a
// silent approximation: callers either raise the budget or give up.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Missing or unreadable files.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropic

#endif
