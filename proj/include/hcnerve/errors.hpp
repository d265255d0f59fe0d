#pragma once

#include <stdexcept>
#include <string>

namespace hcn {

// Base class for everything the library throws on bad input or failed builds.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation needed a level above the truncation cap.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A construction could not be completed (bad instance data, degree
// bookkeeping, missing simplex during lookup, ...).
class BuildError : public Error {
 public:
  using Error::Error;
};

// A combinatorial enumeration hit its configured candidate budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed or mismatching persisted data.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Invalid argument or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hcn
