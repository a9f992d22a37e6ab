#pragma once

#include <stdexcept>
#include <string>

namespace deficit {

// Error classes surfaced through the library API and mapped to distinct
// CLI exit codes. The name() string is stable and appears in diagnostics.
enum class ErrorCode {
    ParseError,
    NonInvolution,
    UnmatchedFace,
    NotManifold,
    NotSimplicial,
    MoveNotApplicable,
    NonPositiveMu,
    InvalidPair,
    TargetOutOfRange,
    NotBracketable,
    InvalidC,
    BudgetExceeded,
    IoError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* name() const { return error_name(code_); }

  private:
    ErrorCode code_;
};

}  // namespace deficit
