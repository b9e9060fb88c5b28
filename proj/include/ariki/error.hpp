#pragma once

#include <stdexcept>
#include <string>

namespace ariki {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something malformed or out of range.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Input is well formed but outside the set an operation is defined on
// (e.g. asking for the a-sequence of a non-FLOTW multipartition).
class DomainError : public Error {
public:
  using Error::Error;
};

// A structural assertion failed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
  using Error::Error;
};

}  // namespace ariki
