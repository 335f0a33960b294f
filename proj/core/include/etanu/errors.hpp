#pragma once

#include <stdexcept>
#include <string>

namespace etanu {

// Base for everything thrown on purpose by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: bad arguments, mismatched ground sets, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Referenced object (edge, element, named instance) does not exist.
class NotFoundError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An element would be a loop (a singleton circuit); those are rejected at
// construction because every consumer assumes singletons are independent.
class LoopError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exhaustive computation would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A checked inequality that is supposed to be a theorem failed on a concrete
// instance.  The message carries the instance so the failure can be replayed.
class TheoremViolationError : public Error {
 public:
  using Error::Error;
};

// One of the structural equalities behind the branch engine failed.
class ClaimViolationError : public TheoremViolationError {
 public:
  using TheoremViolationError::TheoremViolationError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace etanu
