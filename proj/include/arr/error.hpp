#pragma once

#include <stdexcept>
#include <string>

namespace arr {

enum class ErrorKind {
  MixedFields,
  DivisionByZero,
  ParseError,
  FieldMismatch,
  NonLinearFactor,
  ZeroFactor,
  DuplicateHyperplane,
  UnknownVariable,
  SchemaError,
  EmptyArrangement,
  NotAFlat,
  NotAPartition,
  PivotNotInBlockOne,
  NotNice,
  NotAModularChain,
  BadOrder,
  BadSeed,
  NotSorted,
  OutOfRange,
  CapExceeded,
  Internal,
};

const char* error_kind_name(ErrorKind k);

/// Library-wide exception. `position` is a byte offset into the offending
/// input for parser errors, -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, long position = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message +
                           (position >= 0 ? " (at position " + std::to_string(position) + ")" : "")),
        kind_(kind),
        position_(position) {}

  ErrorKind kind() const { return kind_; }
  long position() const { return position_; }

 private:
  ErrorKind kind_;
  long position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, long position = -1) {
  throw Error(kind, message, position);
}

}  // namespace arr
