#pragma once

#include <stdexcept>
#include <string>

namespace topicent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or configuration was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed, or its contents are malformed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The topic solution has no above-threshold structure (no p(w|t) > 1/N).
class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

/// A q-deformed entropy was requested at q = 1 (equivalently T = 1).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// An algorithmic guarantee did not hold at run time, e.g. EM lost monotonicity.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace topicent
