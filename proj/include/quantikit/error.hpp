#pragma once

#include <stdexcept>
#include <string>

namespace quantikit {

/// Failure categories raised by validation, construction and parsing.
enum class Errc {
  // lattice
  CycleError,
  NotALattice,
  UnknownElement,
  // quantaloid
  NotAssociative,
  NotUnital,
  NotSupPreserving,
  TypeMismatch,
  BadParameter,
  // enriched categories and functors
  ReflexivityViolation,
  TransitivityViolation,
  ExtentMismatch,
  NotMonotone,
  // distributors
  BimoduleViolation,
  // Chu objects
  ChuViolation,
  FormulationMismatch,
  WitnessedIllDefinedness,
  NotDistinct,
  // enumeration limits
  SizeCap,
  NotACone,
  // io
  SyntaxError,
  UnresolvedReference,
  ValidationError,
};

const char* errc_name(Errc c);

/// Exception carrying a failure category plus a witness-bearing message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  Errc code() const { return code_; }
  const std::string& message() const { return message_; }

private:
  Errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace quantikit
