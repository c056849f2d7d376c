#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motbun {

enum class ErrorKind {
  ZeroConstantTerm,
  PoleAtOrigin,
  PoleAtPoint,
  DivisionByZero,
  InsufficientDepth,
  NegativeTwistInPoincare,
  TooLarge,
  SingularModel,
  InconsistentCounts,
  InvalidCurve,
  NonIntegralCount,
  PoleAtTwist,
  LaurentRequired,
  Divergent,
  Unsupported,
  SyntaxError,
  ArityError,
  NegativeLength,
  InsufficientCensus,
  InvalidArgument,
  FileFormat,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures also report the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace motbun
