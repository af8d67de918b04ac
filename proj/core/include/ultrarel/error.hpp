#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ultrarel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on carriers of different sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A carrier, family or search exceeds a declared cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural requirement (element out of range, non-open set, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition (e.g. "h is a homomorphism") does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two evaluators that must agree did not.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Unknown suite, property or option value.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents. `where` names the line or field at fault.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace ultrarel
