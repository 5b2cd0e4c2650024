#pragma once

#include <stdexcept>
#include <string>

namespace fg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent theory description.
class TheoryError : public Error {
 public:
  using Error::Error;
};

/// Graph data violating the half-edge model or the ambient theory.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A contraction produced a vertex star admitted by no vertex type.
/// Callers decide whether the offending term is dropped.
class NotInTheoryError : public Error {
 public:
  using Error::Error;
};

/// Configured enumeration or size bound exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

class JsonError : public Error {
 public:
  using Error::Error;
};

}  // namespace fg
