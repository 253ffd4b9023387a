#pragma once

#include <stdexcept>
#include <string>

namespace confprio {

// Month outside 1..12 or a year before 1900.
class InvalidDate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Conference has no dated event visible at the requested date.
class UnrankableConference : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent input file content. The message carries
// "file:line: reason".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace confprio
