#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace verma_ext {

enum class ErrorKind {
    InvalidType,
    RankOverflow,
    IndexOutOfRange,
    BudgetExceeded,
    NotComparable,
    LiftingViolation,
    InvariantViolation,
    RankMismatch,
    ParseError,
    CacheError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::RankOverflow: return "RankOverflow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::LiftingViolation: return "LiftingViolation";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CacheError: return "CacheError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace verma_ext
