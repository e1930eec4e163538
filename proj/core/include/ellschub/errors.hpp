#pragma once

#include <stdexcept>
#include <string>

namespace ellschub {

enum class ErrorKind {
  DivisionByZero,
  SubstitutionPole,
  EvaluationPole,
  UnknownVariable,
  RegistryFull,
  DegreeOverflow,
  Parse,
  UnsupportedSpec,
  GroupTooLarge,
  InvalidWord,
  InvalidElement,
  ModeMismatch,
  Cache,
  Certificate,
  IndexOutOfRange,
  WrongType,
  WrongMode,
  DegenerateDenominator,
  SingularLeadingTerm,
  NotComparable,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ellschub
