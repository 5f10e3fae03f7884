#pragma once

#include <stdexcept>
#include <string>

namespace nhi {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Constraint matrix mu(q) is rank deficient at the evaluated configuration.
struct SingularConstraint : Error {
  using Error::Error;
};

/// Initial (q0, p0) violates mu(q0) M^-1 p0 = 0 beyond tolerance.
struct InadmissibleInitialState : Error {
  using Error::Error;
};

/// Two node-momentum formulas disagree; the trajectory data is corrupted.
struct InconsistentStates : Error {
  using Error::Error;
};

/// Implicit solve failed to reduce the residual below tolerance.
struct NewtonDivergence : Error {
  double final_residual = 0.0;
  NewtonDivergence(const std::string& msg, double residual)
      : Error(msg), final_residual(residual) {}
};

/// A model-specific closed form was evaluated too close to a pole.
struct NearSingularDenominator : Error {
  using Error::Error;
};

/// Config text could not be parsed.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

/// Config parsed but the values are not a usable run description.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace nhi
