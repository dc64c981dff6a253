#pragma once

#include <stdexcept>
#include <string>

namespace crysturn {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes disagree (non-square input, mismatched lengths).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible (over Q or over Z) is not.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Group data fails validation; the message names the violated invariant.
class InvalidGroupError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to normalise the holonomy group does not.
class NotNormalisingError : public Error {
 public:
  using Error::Error;
};

/// (d, D) does not define an automorphism of the group.
class InvalidAutomorphismError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed (group files, matrix/vector syntax, spectra).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A symbolic spectrum operation whose result has no finite description.
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

/// Closure of a matrix group did not terminate below the element cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace crysturn
