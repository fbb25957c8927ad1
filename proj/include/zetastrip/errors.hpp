#pragma once

#include <stdexcept>
#include <string>

namespace zetastrip {

/// Base class of every error thrown by the library. `kind()` is the stable
/// name that appears in machine-readable error records.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Evaluation requested at (or within the guard radius of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PoleError"; }
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

/// A series or product would need more terms than the configured budget,
/// or two evaluation routes disagree beyond tolerance.
class TruncationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "TruncationError"; }
};

class NoBracketError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NoBracketError"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IoError"; }
};

}  // namespace zetastrip
