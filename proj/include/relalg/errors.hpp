#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relalg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tuple length, relation arity or substitution sort does not line up.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Two relations over different universes were combined.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A term or operation was applied at the wrong sort.
class SortError : public Error {
 public:
  using Error::Error;
};

/// Operation symbol not present in the fragment (e.g. negation in pqf).
class FragmentError : public Error {
 public:
  using Error::Error;
};

/// Requested sort lies above the algebra's bound and cannot be materialized.
class InsufficientSorts : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (element count, bit count) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input that could not be parsed. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace relalg
