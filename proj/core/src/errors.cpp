#include "golden/errors.hpp"

namespace golden {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EvaluationAtZero: return "EvaluationAtZero";
    case ErrorCode::EvenOrderForFermionic: return "EvenOrderForFermionic";
    case ErrorCode::OddOrderForSemiclassical: return "OddOrderForSemiclassical";
    case ErrorCode::EvenOrderForState: return "EvenOrderForState";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NotHecke: return "NotHecke";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonPositiveNorm: return "NonPositiveNorm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PrecisionUnachievable: return "PrecisionUnachievable";
  }
  return "Unknown";
}

void require_nonzero_order(long k) {
  if (k == 0) {
    throw DomainError(ErrorCode::InvalidOrder, "order k must be nonzero (F_0 = 0 cannot divide)");
  }
}

}  // namespace golden
