#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zkrylov {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand lengths or matrix dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid sparse input (index out of range, bad CSR arrays).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid problem or solver parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Jacobi construction hit a zero diagonal entry.
class SingularPreconditionerError : public Error {
 public:
  explicit SingularPreconditionerError(std::size_t row)
      : Error("zero diagonal entry at row " + std::to_string(row)), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace zkrylov
