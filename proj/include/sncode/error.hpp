#pragma once

#include <stdexcept>
#include <string>

namespace sncode {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A configured enumeration cap, product budget or arithmetic range was hit.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class CrossCheckFailure : public Error {
public:
  using Error::Error;
};

} // namespace sncode
