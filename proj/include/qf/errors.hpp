#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qf {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group closure exceeded the enumeration limit.
struct GroupTooLargeError : Error {
  using Error::Error;
};

// Simultaneous eigenspace splitting could not reach dimension one
// (signals a bad prime; callers retry with the next candidate).
struct SplitFailureError : Error {
  using Error::Error;
};

// Galois automorphism index not coprime to the cyclotomic order.
struct NotCoprimeError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

// Malformed cyclotomic literal.
struct ParseError : Error {
  using Error::Error;
};

// A structured document failed to parse; `path` points at the offending field.
struct DocumentError : Error {
  std::string path;
  DocumentError(std::string field_path, const std::string& message)
      : Error(message + " (at " +
              (field_path.empty() ? std::string("document root") : field_path) + ")"),
        path(std::move(field_path)) {}
};

// An externally supplied table or representation failed exact validation.
struct ValidationError : Error {
  std::string first_violation;
  explicit ValidationError(std::string violation)
      : Error("validation failed: " + violation), first_violation(std::move(violation)) {}
};

// The decider's hypotheses do not hold; neither verdict is asserted.
struct HypothesisError : Error {
  enum class Kind { DimensionMismatch, DimensionTooSmall, NotFaithful };
  Kind kind;
  HypothesisError(Kind k, const std::string& message) : Error(message), kind(k) {}
};

// Invariant breakage that indicates a bug rather than bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace qf
