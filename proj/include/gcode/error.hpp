#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcode {

enum class ErrorKind {
    NonPrime,
    ReducibleModulus,
    UnsupportedSize,
    DivisionByZero,
    FieldMismatch,
    AmbientMismatch,
    ParseError,
    UnknownGenerator,
    CosetBudgetExceeded,
    IncompleteEnumeration,
    OrderCapExceeded,
    InvalidGroup,
    ContextMismatch,
    NotAPGroup,
    CharMismatch,
    NotARightIdeal,
    BudgetExceeded,
    SideMismatch,
    VerificationFailed,
    ScaleExceeded,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error(ErrorKind::ParseError,
                "at position " + std::to_string(position) + ": expected " + expected),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace gcode
