#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different ambient groups.
class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("ambient mismatch") {}
};

/// A precondition on an argument failed (index out of range, bad witness, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (ball size, assignment count) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed word or system text; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rigid
