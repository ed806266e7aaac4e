#pragma once

#include <stdexcept>
#include <string>

namespace gbl {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape problems: non-square input, block partition that does not sum to the side.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A well-shaped matrix that fails the boundary-link Seifert matrix conditions.
class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

/// A move or witness that does not replay against the matrix it is applied to.
class WitnessError : public Error {
 public:
  using Error::Error;
};

class DiagramError : public Error {
 public:
  using Error::Error;
};

/// Malformed file contents (bad JSON, wrong schema, trailing data).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbl
