#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class VarietyMismatch : public Error {
 public:
  using Error::Error;
};

/// A candidate vector field maps a defining polynomial outside the ideal.
class TangencyError : public Error {
 public:
  TangencyError(const std::string& defining, const std::string& residue)
      : Error("derivation is not tangent: image of " + defining + " is " + residue +
              ", which is not in the ideal"),
        defining_(defining),
        residue_(residue) {}
  const std::string& defining() const noexcept { return defining_; }
  const std::string& residue() const noexcept { return residue_; }

 private:
  std::string defining_;
  std::string residue_;
};

class ShearConditionViolated : public Error {
 public:
  explicit ShearConditionViolated(const std::string& residue)
      : Error("shear condition D(f) = 0 fails, D(f) = " + residue), residue_(residue) {}
  const std::string& residue() const noexcept { return residue_; }

 private:
  std::string residue_;
};

class OvershearConditionViolated : public Error {
 public:
  explicit OvershearConditionViolated(const std::string& residue)
      : Error("overshear condition D^2(f) = 0 fails, D^2(f) = " + residue), residue_(residue) {}
  const std::string& residue() const noexcept { return residue_; }

 private:
  std::string residue_;
};

class PointNotOnVariety : public Error {
 public:
  using Error::Error;
};

class UncertifiedDerivation : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (recomposition, tangency of a bracket, ...).
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace lnd
