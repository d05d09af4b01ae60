#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments that do not fall under a more specific category.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A matrix has an eigenvalue on the closed negative real axis.
class NonPrincipalLog : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Elements of G_t and G_s with t != s were combined.
class MixedParameters : public Error {
 public:
  using Error::Error;
};

class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

class NotDiagonal : public Error {
 public:
  using Error::Error;
};

/// A K-translation is not a multiple of the grid spacing 2*pi/N.
class OffGridRotation : public Error {
 public:
  using Error::Error;
};

class WeightUnsupported : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

/// The subspace handed to the complement routine is not given by a basis.
class NotAComplementableInput : public Error {
 public:
  using Error::Error;
};

}  // namespace mackey
