#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpz {

/// Machine-readable failure categories. Every library error carries one.
enum class ErrorCode {
    ZeroCoefficient = 1,
    ZeroInitialValues,
    NonFinite,
    Overflow,
    DegenerateDiscriminant,
    PoleEvaluation,
    NoConvergence,
    DegenerateInput,
    OutOfTheoremScope,
    RegimeMismatch,
    PreconditionViolated,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::ZeroInitialValues: return "ZeroInitialValues";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorCode::PoleEvaluation: return "PoleEvaluation";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tpz
