#ifndef OMEGA_ERROR_HPP
#define OMEGA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

enum class ErrorCode {
  InvalidArgument,
  NotDivisible,
  DivisionByZero,
  NonSquare,
  NonInvertibleSubstitution,
  LengthMismatch,
  RepeatedGenerators,
  PreconditionViolated,
  NotSymmetric,
  KTooLarge,
  MethodDisagreement,
  ParseError,
  StructureError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace omega

#endif  // OMEGA_ERROR_HPP
