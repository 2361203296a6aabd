#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polar {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero in prime field") {}
};

// Mismatched ambient counts, moduli, shapes, indices out of range.
class StructuralError : public Error {
public:
  using Error::Error;
};

// Input text that does not follow the polynomial / system / matrix formats.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        message_(what), line_(line), column_(column) {}

  // The message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A documented precondition of an operation does not hold for the given data
// (rank-deficient matrix, point not on the variety, characteristic 2, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A configured resource budget was exceeded. Never replaced by a partial answer.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace polar
