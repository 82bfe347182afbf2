#pragma once

#include <stdexcept>
#include <string>

namespace toa {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A wave function was handed to an operation in the wrong representation.
class RepresentationError final : public Error {
 public:
  using Error::Error;
};

// A parameter or field failed validation; the message names the field.
class InputError final : public Error {
 public:
  using Error::Error;
};

// The requested state or observable cannot be represented on the given grid.
class ResolutionError final : public Error {
 public:
  using Error::Error;
};

// A window/axis does not cover the quantity being measured.
class WindowError final : public Error {
 public:
  using Error::Error;
};

// Non-finite amplitudes or a diverging iteration.
class NumericsError final : public Error {
 public:
  using Error::Error;
};

// Classical arrival time is undefined (zero momentum).
class UndefinedArrivalError final : public Error {
 public:
  using Error::Error;
};

}  // namespace toa
