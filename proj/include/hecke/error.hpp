#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to an operation (out-of-range degree, s <= 1, singular curve...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A degree, reduction or pairing the ledger has no cuspidality data for.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Pole queries under a dihedral (monomial) assumption.
class MonomialExcludedError : public Error {
 public:
  explicit MonomialExcludedError(const std::string& what)
      : Error("monomial (dihedral) representations are excluded: " + what) {}
};

/// Character evaluation hit a symbol without a value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Malformed atom text, CSV row or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
