#pragma once

#include <stdexcept>
#include <string>

namespace expander {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad degrees, unparsable text, violated preconditions.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// A configured size limit (vertices, points, group order) would be exceeded.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// A generation certificate did not hold.
class CertificationFailure : public Error {
public:
  using Error::Error;
};

// An iterative solver stopped before reaching the requested tolerance.
class ConvergenceFailure : public Error {
public:
  ConvergenceFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

} // namespace expander
