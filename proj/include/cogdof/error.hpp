#pragma once

#include <stdexcept>
#include <string>

namespace cogdof {

// Base of every error raised by the library. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A DOF point outside the achievable integer set of its scenario.
class NotAchievable : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class Undecodable : public Error {
 public:
  using Error::Error;
};

// Repeated rank-deficient channel draws; only a broken RNG gets here.
class DegenerateChannel : public Error {
 public:
  using Error::Error;
};

}  // namespace cogdof
