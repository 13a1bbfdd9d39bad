#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nrt {

enum class ErrorCode {
  EmptyProfile,
  NonPositiveDegree,
  ComplexComplementEmpty,
  InvalidMDisc,
  MalformedPage,
  DualityOutOfRange,
  DegreeMismatch,
  ZeroForm,
  NonSquarefree,
  PredicateVanishesAtRoot,
  OnResultantVariety,
  ParityMismatch,
  IllegalIndex,
  UnsupportedProfileForCensus,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type; the
// code is stable and is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace nrt
