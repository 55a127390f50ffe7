#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rpq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not conform for a matrix kernel.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed line in an edge-list or workload file.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Query text does not conform to the pattern grammar. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what)
      : Error("column " + std::to_string(column) + ": " + what),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Unknown vertex id, label id or out-of-range index.
class LookupError : public Error {
 public:
  using Error::Error;
};

// An evaluation invariant was observed broken while invariant checking was on.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rpq
