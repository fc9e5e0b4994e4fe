#pragma once

#include <stdexcept>
#include <string>

namespace asymfun {

/// Base class for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (bad n, bad radius, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class NonconvergenceError : public Error {
 public:
  using Error::Error;
};

class TooCloseToContour : public Error {
 public:
  using Error::Error;
};

/// A circle |w| = t passes through a path vertex or is tangent to a segment.
class DegenerateRadius : public Error {
 public:
  using Error::Error;
};

class LabelConflict : public Error {
 public:
  using Error::Error;
};

class StartOutsideDomain : public Error {
 public:
  using Error::Error;
};

class NotOnRay : public Error {
 public:
  using Error::Error;
};

class EmptySlice : public Error {
 public:
  using Error::Error;
};

class InsufficientDynamicRange : public Error {
 public:
  using Error::Error;
};

class TermCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON files, inline specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace asymfun
