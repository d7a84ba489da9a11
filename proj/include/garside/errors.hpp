#ifndef GARSIDE_ERRORS_HPP
#define GARSIDE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace garside {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed germ data: out-of-range ids, missing identities, conflicting entries.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments violating its precondition
/// (endpoint mismatch, non-composable word, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The germ lacks a property the operation depends on (left-associativity,
/// a Garside verdict, ...).
class UnsupportedGermError : public Error {
 public:
  using Error::Error;
};

/// A rewriting move that is not an instance of a defined product.
class InvalidMoveError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; signals that a verdict the
/// computation relied on was wrong.
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

/// Unsupported Coxeter family or rank.
class UnsupportedSpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace garside

#endif  // GARSIDE_ERRORS_HPP
