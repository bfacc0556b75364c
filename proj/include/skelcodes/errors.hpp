#pragma once

#include <stdexcept>
#include <string>

namespace skelcodes {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on parameters was violated (range, shape, field mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A search would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace skelcodes
