#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mbposet {

enum class ErrorCode {
  CycleDetected,
  UnknownElement,
  DuplicateElement,
  EmptyPoset,
  EmptyComplex,
  MalformedLine,
  NotAChainComplex,
  NotASubcomplex,
  NotCellular,
  InconsistentIncidence,
  NonUnitIncidenceOnAdmissible,
  NotACover,
  ElementMatchedTwice,
  NotGraded,
  NotAdmissible,
  NotMorse,
  NotMorseSmale,
  NotMorseMatching,
  CriticalValueInInterval,
  WrongCriticalCount,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace mbposet
