#pragma once

#include <stdexcept>
#include <string>

namespace intertwine {

// Exit-code mapping in the CLI: ParseError, ValidationError, DomainError and
// PreconditionError are caller mistakes (2); BoundExceeded is 3.

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inadmissible Cartan type/rank and similar construction failures.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (not a root, w not in W_lambda, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Criterion hypothesis not met, e.g. a non-dominant lambda.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed its configured size limit.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace intertwine
