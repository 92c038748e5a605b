#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorCode {
    RingMismatch,
    NotAUnit,
    BadInput,
    HypothesisNotMet,
    JacobianNotUnit,
    NoProgress,
    NoSolution,
    PrecisionExhausted,
    BudgetExceeded,
    UnsupportedKind,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::JacobianNotUnit: return "JacobianNotUnit";
        case ErrorCode::NoProgress: return "NoProgress";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    }
    return "Unknown";
}

class ArtinError : public std::runtime_error {
public:
    ArtinError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw ArtinError(code, msg);
}

}  // namespace artin
