#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace golden {

/// Machine-readable error categories raised by the library.
enum class ErrorCode {
  DivisionByZero,
  InvalidOrder,
  NegativeIndex,
  IndexOutOfRange,
  EvaluationAtZero,
  EvenOrderForFermionic,
  OddOrderForSemiclassical,
  EvenOrderForState,
  WrongArity,
  NotHecke,
  PoleHit,
  OutOfDomain,
  NonPositiveNorm,
  InvalidArgument,
  PrecisionUnachievable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition failure in the library is reported as a DomainError
/// carrying one of the codes above.
class DomainError : public std::domain_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::domain_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws InvalidOrder when k == 0.
void require_nonzero_order(long k);

}  // namespace golden
