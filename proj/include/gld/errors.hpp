#pragma once

#include <stdexcept>
#include <string>

namespace gld {

/// Malformed input: polynomial syntax, non-bihomogeneous relations, bad
/// module files, mismatched ring signatures.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial parse failure with the 1-based column of the offending token.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int column)
      : InputError(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// A truncation was not large enough: Čech denominator caps that never
/// stabilized, slice cutoffs, resolution windows.
class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input violating its precondition
/// (e.g. cm_dual on a module that is not Cohen-Macaulay).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gld
