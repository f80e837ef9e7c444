#ifndef CFRAC_ERRORS_HPP
#define CFRAC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfrac {

// Base class for all library errors.  Each subclass maps to one status code
// in the C API.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a generated partial numerator a_n evaluates to zero.  The
// fraction terminates at that point, so evaluation past it is undefined.
class ZeroPartialNumerator : public Error {
public:
  explicit ZeroPartialNumerator(std::uint64_t index)
      : Error("partial numerator a_" + std::to_string(index) + " is zero"),
        index_(index) {}
  std::uint64_t index() const { return index_; }

private:
  std::uint64_t index_;
};

// Raised when a contraction or equivalence transform is undefined because a
// required partial denominator vanishes.
class TransformUndefined : public Error {
public:
  TransformUndefined(const std::string& what, std::uint64_t index)
      : Error(what + " undefined: b_" + std::to_string(index) + " is zero"),
        index_(index) {}
  std::uint64_t index() const { return index_; }

private:
  std::uint64_t index_;
};

// Raised when an operation requires a specific fraction form (typically unit
// partial denominators) and the input does not have it.
class WrongForm : public Error {
public:
  explicit WrongForm(const std::string& msg) : Error(msg) {}
};

// Raised for criterion parameters outside their admissible range.
class InvalidParameter : public Error {
public:
  explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// Raised for malformed inputs to library operations (empty traces, zero
// tolerances, out-of-range indices, ...).
class InvalidInput : public Error {
public:
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// Raised by the DSL parser; carries a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Raised when an expression cannot be evaluated at some index (division by
// zero, non-integer exponent, value out of a finite list's range).
class EvalError : public Error {
public:
  explicit EvalError(const std::string& msg) : Error(msg) {}
};

}  // namespace cfrac

#endif  // CFRAC_ERRORS_HPP
