#pragma once

#include <stdexcept>
#include <string>

namespace tropichinese {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked 64-bit arithmetic left its range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible shape (dimension, block count, rank).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force enumeration grew beyond its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input is not the image of any canonical word (recovery failed to
/// re-substitute, or produced a negative or fractional exponent).
class InconsistentImage : public Error {
 public:
  using Error::Error;
};

/// A mathematical guarantee was violated; indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropichinese
