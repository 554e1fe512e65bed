#pragma once

#include <stdexcept>
#include <string>

namespace llv {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct WrongDegree : Error {
  using Error::Error;
};

struct SchemaError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct NotLefschetz : Error {
  using Error::Error;
};

struct NonUniqueDual : Error {
  using Error::Error;
};

struct NotDirectSum : Error {
  using Error::Error;
};

struct Degenerate : Error {
  using Error::Error;
};

struct EqualIndices : Error {
  using Error::Error;
};

struct NotHomogeneous : Error {
  using Error::Error;
};

struct NotIsotropic : Error {
  using Error::Error;
};

struct TruncationFailure : Error {
  using Error::Error;
};

}  // namespace llv
