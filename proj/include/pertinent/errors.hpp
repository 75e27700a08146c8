#pragma once

#include <stdexcept>
#include <string>

namespace pertinent {

// Thrown when a matrix dimension or index is outside an operation's range.
class DimensionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Thrown when an input does not respect its family (a fixed element is 0, a
// diagonal is not unit, ...).
class SpecViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pertinent
