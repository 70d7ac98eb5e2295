#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starsys {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes are incompatible.
class ShapeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The requested equation has no solution; carries the criterion residual.
class UnsolvableError : public Error {
 public:
  UnsolvableError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Two matrices are not comparable in the star order; carries both
/// defining residuals (AA* vs BA* and A*A vs A*B).
class NotComparableError : public PreconditionError {
 public:
  NotComparableError(const std::string& what, double left, double right)
      : PreconditionError(what), left_(left), right_(right) {}
  double left_residual() const noexcept { return left_; }
  double right_residual() const noexcept { return right_; }

 private:
  double left_;
  double right_;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace starsys
