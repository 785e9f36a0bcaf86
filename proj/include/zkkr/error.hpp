#pragma once

#include <stdexcept>
#include <string>

namespace zkkr {

/// Base of every error the library throws. The CLI maps the concrete
/// subclass onto its exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's mathematical domain
/// (pole of Γ, series below its validity bound, empty bracket, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested height lies outside the validated accuracy regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A query exceeds the range a catalog or grid actually covers.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Bisection, bracketing or a fit failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A least-squares system is too ill-conditioned to trust.
class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries the offending 1-based line number.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zkkr
