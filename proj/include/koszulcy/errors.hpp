#pragma once

#include <stdexcept>
#include <string>

namespace koszulcy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in spaces of different dimension or tensor degree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (singular map, wrong degree, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed the configured word-count cap.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace koszulcy
