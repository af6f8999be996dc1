// Error types shared by all solver modules.
//
// Two families: InputError for malformed data, parameters, or file formats
// (CLI exit code 1), SolverError for numerical failures inside an otherwise
// well-posed computation (CLI exit code 2).  Every concrete error carries a
// stable machine-readable name used in diagnostics and reports.

#ifndef ERATE_ERRORS_HPP
#define ERATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace erate {

class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

// Bad user input: invalid states, parameters out of range, parse failures.
class InputError : public Error {
public:
  using Error::Error;
};

// Numerical failure: missing brackets, diverged iterations, infeasible data.
class SolverError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& what) : InputError("ParseError", what) {}
};

class NoTwoShockRoot : public SolverError {
public:
  NoTwoShockRoot(const std::string& what) : SolverError("NoTwoShockRoot", what) {}
};

class BracketingFailure : public SolverError {
public:
  BracketingFailure(const std::string& what) : SolverError("BracketingFailure", what) {}
};

class VacuumFormation : public SolverError {
public:
  VacuumFormation(const std::string& what) : SolverError("VacuumFormation", what) {}
};

class DegenerateShock : public SolverError {
public:
  DegenerateShock(const std::string& what) : SolverError("DegenerateShock", what) {}
};

class NewtonDivergence : public SolverError {
public:
  NewtonDivergence(const std::string& what) : SolverError("NewtonDivergence", what) {}
};

class InvalidIntermediate : public SolverError {
public:
  InvalidIntermediate(const std::string& what) : SolverError("InvalidIntermediate", what) {}
};

class WavesLeftBox : public SolverError {
public:
  WavesLeftBox(const std::string& what) : SolverError("WavesLeftBox", what) {}
};

class EpsilonOutOfRange : public InputError {
public:
  EpsilonOutOfRange(const std::string& what) : InputError("EpsilonOutOfRange", what) {}
};

class InfeasibleLambda : public SolverError {
public:
  InfeasibleLambda(const std::string& what) : SolverError("InfeasibleLambda", what) {}
};

} // namespace erate

#endif
