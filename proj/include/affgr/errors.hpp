#pragma once

#include <stdexcept>

namespace affgr {

/// Input is well-formed but outside an operation's domain (non-dominant
/// weight, mismatched root data, not a root, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input: type specs, weight literals, command lines.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace affgr
