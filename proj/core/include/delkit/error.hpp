#pragma once

#include <stdexcept>
#include <string>

namespace delkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed as a bit string, RLE or composition.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An enumeration was asked to go beyond its configured size limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An exact value does not fit the fixed-width type it was requested in.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace delkit
