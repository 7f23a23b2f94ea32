#pragma once

#include <stdexcept>
#include <string>

namespace ramcycle {

enum class ErrorKind {
    NegativeBranchCount,
    DegreeMismatch,
    CostBoundExceeded,
    DegreeTooLarge,
    PreconditionViolation,
    ExactModeUnavailable,
    ParseError,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NegativeBranchCount: return "NegativeBranchCount";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::CostBoundExceeded: return "CostBoundExceeded";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::ExactModeUnavailable: return "ExactModeUnavailable";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void check(bool cond, ErrorKind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

// Internal invariant check; throwing keeps violations visible in release builds.
inline void assert_internal(bool cond, const std::string& msg) {
    if (!cond) fail(ErrorKind::Internal, msg);
}

}  // namespace ramcycle
