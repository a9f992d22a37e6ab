#include "deficit/errors.hpp"

namespace deficit {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonInvolution: return "NonInvolution";
        case ErrorCode::UnmatchedFace: return "UnmatchedFace";
        case ErrorCode::NotManifold: return "NotManifold";
        case ErrorCode::NotSimplicial: return "NotSimplicial";
        case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
        case ErrorCode::NonPositiveMu: return "NonPositiveMu";
        case ErrorCode::InvalidPair: return "InvalidPair";
        case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
        case ErrorCode::NotBracketable: return "NotBracketable";
        case ErrorCode::InvalidC: return "InvalidC";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace deficit
