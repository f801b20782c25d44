#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivfact {

enum class ErrorKind {
  DegreeTooLarge,
  NotPrime,
  ResidueOutOfRange,
  MixedPrimes,
  UnknownIndex,
  UnknownPrime,
  NotSquareFree,
  NotIntegerValued,
  ContentNotCoprime,
  NotImagePrimitive,
  PrimeNotInDenominator,
  WindowTooSmall,
  TooLarge,
  SyntaxError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ResidueOutOfRange: return "ResidueOutOfRange";
    case ErrorKind::MixedPrimes: return "MixedPrimes";
    case ErrorKind::UnknownIndex: return "UnknownIndex";
    case ErrorKind::UnknownPrime: return "UnknownPrime";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::NotIntegerValued: return "NotIntegerValued";
    case ErrorKind::ContentNotCoprime: return "ContentNotCoprime";
    case ErrorKind::NotImagePrimitive: return "NotImagePrimitive";
    case ErrorKind::PrimeNotInDenominator: return "PrimeNotInDenominator";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message names the violated
/// precondition in user-facing terms; `kind()` is for programmatic dispatch.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the byte offset into the input string.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              "syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ivfact
