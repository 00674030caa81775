#pragma once

#include <stdexcept>
#include <string>

namespace qvest {

/// Base class for every error raised by the estimation library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument lies outside the domain of the model.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// Least-squares fit has no unique slope (e.g. every size identical).
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

/// Distillation cannot reach the requested output error.
class UnachievableTarget : public Error {
 public:
  using Error::Error;
};

}  // namespace qvest
