#pragma once

#include <stdexcept>
#include <string>

namespace umbraldob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No truncation index satisfied the tail criterion before the hard cap.
class NonConvergentError : public Error {
 public:
  using Error::Error;
};

/// A series handed to certified summation produced a negative term.
class NegativeTermError : public Error {
 public:
  using Error::Error;
};

/// Index outside the values a custom sequence provides.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Sequence fails psi(0) = 0, psi(n) > 0.
class InadmissibleSequenceError : public Error {
 public:
  using Error::Error;
};

/// Triangular solve hit a non-exact division. Signals a bug for Gauss-q input.
class InconsistentSystemError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a desk-scale cap (enumeration size, table size).
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, sequence specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace umbraldob
