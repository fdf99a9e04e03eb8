#pragma once

#include <stdexcept>
#include <string>

namespace arcbest {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the documented domain (angle range, parameter constraints, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Index out of range (basis function index, control point index).
class IndexError : public Error {
public:
  using Error::Error;
};

// A numeric self-check failed (division remainder, leading-coefficient
// cross-check, curve collapsing onto the origin).
class NumericalError : public Error {
public:
  using Error::Error;
};

// A root bracket could not be established; indicates a formula or
// precondition violation rather than bad user input.
class BracketError : public Error {
public:
  using Error::Error;
};

// Iteration cap reached before the requested tolerance.
class ConvergenceError : public Error {
public:
  explicit ConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

private:
  double best_residual_;
};

// The error profile has no interior extremum besides t = 0.
class NoInteriorExtremum : public Error {
public:
  using Error::Error;
};

// |alpha| of the even quadratic is below resolution.
class DegenerateQuadratic : public Error {
public:
  using Error::Error;
};

// Profile values do not alternate in sign.
class NotAlternating : public Error {
public:
  using Error::Error;
};

}  // namespace arcbest
