#pragma once

#include <stdexcept>
#include <string>

namespace nilgraph {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid constructor parameters or a malformed group description.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured order cap.
class OrderCapError : public Error {
 public:
  using Error::Error;
};

/// An argument does not satisfy an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilgraph
