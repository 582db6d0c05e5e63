#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bhg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownAlgebra : public Error {
public:
  using Error::Error;
};

class BasisMismatch : public Error {
public:
  using Error::Error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// A trajectory left the representable range; carries the offending step.
class DivergedIntegration : public Error {
public:
  DivergedIntegration(const std::string& msg, std::size_t step)
      : Error(msg + " (step " + std::to_string(step) + ")"), step_(step) {}
  std::size_t step() const { return step_; }

private:
  std::size_t step_;
};

class UnitarityDrift : public Error {
public:
  using Error::Error;
};

class DegenerateCurvature : public Error {
public:
  using Error::Error;
};

class InsufficientSamples : public Error {
public:
  using Error::Error;
};

class InsufficientMargin : public Error {
public:
  using Error::Error;
};

class NotTangent : public Error {
public:
  using Error::Error;
};

class GridMismatch : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class InvalidLoopParameter : public Error {
public:
  using Error::Error;
};

}  // namespace bhg
