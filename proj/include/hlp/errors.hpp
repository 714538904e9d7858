#pragma once

#include <stdexcept>
#include <string>

namespace hlp {

enum class ErrorCode {
  // validation: bad input, configuration or unsupported request
  UnsupportedField,
  InvalidStrip,
  InvalidBox,
  InvalidBump,
  InvalidTau,
  EmptyGrid,
  ParseError,
  IoError,
  DegenerateDirection,
  InvalidArgument,
  // numeric: a computation could not be carried out
  Overflow,
  OverflowGuard,
  CostGuard,
  DivisionStuck,
  QuadratureFail,
  SeriesDiverged,
  IterationCap,
  DegenerateFit,
};

const char* to_string(ErrorCode code);

// Validation errors map to CLI exit code 2, numeric failures to 3.
bool is_numeric(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool numeric() const noexcept { return is_numeric(code_); }

 private:
  ErrorCode code_;
};

}  // namespace hlp
