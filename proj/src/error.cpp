#include "gcode/error.hpp"

namespace gcode {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::CosetBudgetExceeded: return "CosetBudgetExceeded";
        case ErrorKind::IncompleteEnumeration: return "IncompleteEnumeration";
        case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
        case ErrorKind::InvalidGroup: return "InvalidGroup";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::NotAPGroup: return "NotAPGroup";
        case ErrorKind::CharMismatch: return "CharMismatch";
        case ErrorKind::NotARightIdeal: return "NotARightIdeal";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::SideMismatch: return "SideMismatch";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::ScaleExceeded: return "ScaleExceeded";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace gcode
