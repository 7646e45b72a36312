#include "mbposet/error.hpp"

namespace mbposet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::NotAChainComplex: return "NotAChainComplex";
    case ErrorCode::NotASubcomplex: return "NotASubcomplex";
    case ErrorCode::NotCellular: return "NotCellular";
    case ErrorCode::InconsistentIncidence: return "InconsistentIncidence";
    case ErrorCode::NonUnitIncidenceOnAdmissible: return "NonUnitIncidenceOnAdmissible";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::ElementMatchedTwice: return "ElementMatchedTwice";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotMorse: return "NotMorse";
    case ErrorCode::NotMorseSmale: return "NotMorseSmale";
    case ErrorCode::NotMorseMatching: return "NotMorseMatching";
    case ErrorCode::CriticalValueInInterval: return "CriticalValueInInterval";
    case ErrorCode::WrongCriticalCount: return "WrongCriticalCount";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace mbposet
