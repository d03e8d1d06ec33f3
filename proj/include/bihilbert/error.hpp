#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bihilbert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the invariants of a sided partition (or two partitions
/// with different sides were combined).
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// The complement of a monomial ideal in some bidegree is not a bilex set,
/// so no partition describes it.
class NotBilexError : public Error {
 public:
  using Error::Error;
};

/// A bidegree-wise family of monomial sets is not closed under
/// multiplication by the variables.
class ClosureError : public Error {
 public:
  using Error::Error;
};

/// A candidate witness does not satisfy the compatibility conditions.
class InvalidWitness : public Error {
 public:
  using Error::Error;
};

/// The input table fails the admissibility conditions.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine was asked to work beyond its configured limits.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bihilbert
