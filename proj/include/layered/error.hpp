#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace layered {

enum class ErrorCode {
    InvalidLayer,
    NonInvertibleLayer,
    LayerNotDivisible,
    NotFullForm,
    NotMonic,
    NotSeparable,
    NotPrimary,
    NotPrimaryPair,
    NotSquare,
    DegreeZero,
    OutOfRange,
    ArityMismatch,
    PreconditionViolated,
    ParseError,
};

inline std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidLayer: return "InvalidLayer";
        case ErrorCode::NonInvertibleLayer: return "NonInvertibleLayer";
        case ErrorCode::LayerNotDivisible: return "LayerNotDivisible";
        case ErrorCode::NotFullForm: return "NotFullForm";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotSeparable: return "NotSeparable";
        case ErrorCode::NotPrimary: return "NotPrimary";
        case ErrorCode::NotPrimaryPair: return "NotPrimaryPair";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Thrown by every operation in the library. `code()` identifies the failure
/// class; the CLI maps it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures carry the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace layered
