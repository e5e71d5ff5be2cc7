#pragma once

#include <stdexcept>
#include <string>

namespace bdn {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; the message names the offending line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of the operation (out-of-range vertex,
// invalid coloring handed to a builder).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A theorem-level precondition does not hold for this input.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

// The caller broke a documented precondition on an intermediate object.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Exponential search refused because the instance exceeds the configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A self-check failed. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Boolean result carrying the reason when false.
struct Verdict {
  bool ok = true;
  std::string diagnostic;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace bdn
