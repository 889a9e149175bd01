#pragma once

#include <stdexcept>
#include <string>

namespace tracefield {

enum class ErrorKind {
  InvalidArgument,
  NotPrime,
  Reducible,
  SizeBudgetExceeded,
  DivisionByZero,
  NotAField,
  NoSuchForm,
  WrongDegree,
  InseparableTower,
  CriterionUnavailable,
  UnsupportedCase,
  ZeroTarget,
  DegenerateF,
  ZeroGamma,
  BudgetExceeded,
  NotGuaranteed,
  NoWitnessFound,
  ParseError,
  UnknownSuite,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tracefield
