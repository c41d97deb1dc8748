#pragma once

#include <stdexcept>
#include <string>

namespace nbrecon {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition: out-of-range vertex, length mismatch, bad flag.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A size cap or an enumeration budget was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message, const std::string& source = {})
      : Error((source.empty() ? std::string() : source + ":") + "line " + std::to_string(line) +
              ": " + message),
        line_(line),
        message_(message) {}

  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

/// A permutation was used as an anti-automorphism but is not one.
class InvalidAntiError : public Error {
 public:
  using Error::Error;
};

/// A two-fold pair or a permutation handed to the group action is outside its set.
class InvalidActionError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Enumeration guard. Exhaustive searches refuse inputs past their default
/// size limits unless the caller opts out.
struct Budget {
  bool unbounded = false;

  void require(bool within_default, const std::string& what) const {
    if (!unbounded && !within_default) throw CapacityError(what);
  }
};

}  // namespace nbrecon
