#pragma once

#include <stdexcept>
#include <string>

namespace gext {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class ParentMismatch : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A certificate failed its own recheck. Never a legal state; signals a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace gext
