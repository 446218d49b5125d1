#pragma once

#include <stdexcept>
#include <string>

namespace leonard {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands living in different fields, or matrices of different order.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Inputs that violate a construction constraint (field characteristic too
/// small, degenerate family parameters, out-of-range indices, ...).
class ConstraintError : public Error {
 public:
  ConstraintError(std::string constraint, const std::string& message)
      : Error(message), constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// A candidate Leonard system failed one of the defining conditions.
/// `condition()` names the failed condition; `first()`/`second()` carry the
/// offending indices (or -1 when not applicable).
class ValidationError : public Error {
 public:
  ValidationError(std::string condition, long first, long second,
                  const std::string& message)
      : Error(message),
        condition_(std::move(condition)),
        first_(first),
        second_(second) {}

  const std::string& condition() const noexcept { return condition_; }
  long first() const noexcept { return first_; }
  long second() const noexcept { return second_; }

 private:
  std::string condition_;
  long first_;
  long second_;
};

}  // namespace leonard
