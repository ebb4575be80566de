#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deagrs {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unusable input: bad dimensions, bad CSV, bad configuration.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure or an LP outcome that the model structure rules out.
class SolverError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public DataError {
 public:
  using DataError::DataError;
};

class IterationLimitError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The maximal-support rescaling divisor vanished, i.e. the system had no
/// feasible point with a positive homogenizing component.
class DegenerateNormalizerError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The point handed to the intercept LPs admits no supporting hyperplane.
class NotOnFrontierError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// v.x = 1 has no solution with v >= 0 (input vector has no positive entry).
class NormalizationUnattainableError : public DataError {
 public:
  using DataError::DataError;
};

class ParseError : public DataError {
 public:
  enum class Kind { malformed_header, duplicate_name, missing_name, non_numeric_cell, ragged_row, empty_dataset };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : DataError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace deagrs
