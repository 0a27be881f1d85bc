#pragma once

#include <stdexcept>
#include <string>

namespace shakekit {

/// Base class of every error the engine raises. The CLI maps InputError
/// subclasses to exit status 2 and everything else to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Malformed input: unparsable text, bad JSON shape, etc.
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InputError"; }
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : InputError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }
  const char* kind() const noexcept override { return "SyntaxError"; }

 private:
  std::size_t pos_;
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

class OddDimension : public DomainError {
 public:
  explicit OddDimension(int dim)
      : DomainError("Seifert matrix has odd dimension " + std::to_string(dim)) {}
  const char* kind() const noexcept override { return "OddDimension"; }
};

class InvalidRoot : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "InvalidRoot"; }
};

class NearSingular : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "NearSingular"; }
};

class UnassignedAtom : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "UnassignedAtom"; }
};

class WitnessNotFound : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "WitnessNotFound"; }
};

}  // namespace shakekit
