#pragma once

#include <stdexcept>

namespace diskrad {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter or precondition violation; the message names the offending field.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Malformed or schema-violating config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Linear-solve breakdown or non-finite state.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace diskrad
