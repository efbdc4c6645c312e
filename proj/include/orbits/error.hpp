#pragma once

#include <stdexcept>
#include <string>

namespace orbits {

enum class ErrorKind {
  MalformedToken,
  LabelCountError,
  LengthMismatch,
  NotPermutation,
  NotFixedPointFree,
  FamilyMismatch,
  SignatureMismatch,
  SizeMismatch,
  OddSignCount,
  InvalidGenerator,
  NotComparable,
  Contains1212,
  GrassmannianViolation,
  PatternNotInvolution,
  InternalInvariant,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbits
