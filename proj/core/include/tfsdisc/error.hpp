#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfsdisc {

/// Base class for input faults (bad files, bad declarations). Unification
/// failure is not an error; operations report it through std::optional.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected type hierarchy declaration set.
class HierarchyError : public Error {
 public:
  using Error::Error;
};

/// Located syntax or typing error in one of the text formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A non-monotonic search was asked to enumerate more atoms than the
/// configured ceiling allows.
class LimitError : public Error {
 public:
  LimitError(std::size_t atoms, std::size_t ceiling)
      : Error("atom set of size " + std::to_string(atoms) +
              " exceeds the configured ceiling of " + std::to_string(ceiling)),
        atoms_(atoms),
        ceiling_(ceiling) {}

  std::size_t atoms() const { return atoms_; }
  std::size_t ceiling() const { return ceiling_; }

 private:
  std::size_t atoms_;
  std::size_t ceiling_;
};

}  // namespace tfsdisc
